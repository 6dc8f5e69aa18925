"""Seeded synthetic class-model generation."""

from ..models.generation import GenSpec
from .model_gen import generate

__all__ = ["GenSpec", "generate"]
