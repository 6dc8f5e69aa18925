"""
Parameters for synthetic class-model generation.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class GenSpec(BaseModel):
    """
    Seeded knobs for ``generate``.

    ``attribute_sharing`` is the cohesion knob: 1 makes every method of a class
    share one attribute, 0 gives methods disjoint attribute sets.
    ``coupling_mode`` ties cohesion to coupling per class: in ``inverse`` mode
    cohesive classes call out more (LCOM and coupling rank inversely), in
    ``direct`` mode cohesive classes call out less.
    """

    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
        json_schema_extra={
            "example": {
                "seed": 7,
                "n_classes": 12,
                "n_packages": 3,
                "max_methods": 8,
                "max_fields": 6,
                "inheritance_prob": 0.3,
                "cross_class_call_prob": 0.4,
                "attribute_sharing": 0.5,
            }
        },
    )

    seed: int = Field(default=0, ge=0, lt=2**64)
    n_classes: int = Field(default=10, ge=0)
    n_packages: int = Field(default=1, ge=1)
    max_methods: int = Field(default=5, ge=0)
    max_fields: int = Field(default=5, ge=0)
    inheritance_prob: float = Field(default=0.3, ge=0.0, le=1.0)
    cross_class_call_prob: float = Field(default=0.3, ge=0.0, le=1.0)
    attribute_sharing: float = Field(default=0.5, ge=0.0, le=1.0)
    intra_class_call_prob: float = Field(default=0.2, ge=0.0, le=1.0)
    coupling_mode: Literal["independent", "inverse", "direct"] = "independent"

