"""
HTTP entry point for the ckmetrics MCP server.

Serves the FastMCP app over streamable HTTP, mounted at ``/mcp``, plus a
``/health`` endpoint. Run with ``python http_server.py`` or any ASGI server.
"""
import logging
import os

from fastapi.responses import JSONResponse
from starlette.applications import Starlette
from starlette.routing import Mount, Route

from ckmetrics import __version__
from ckmetrics.config import DEFAULT_CONFIG
from ckmetrics.metrics import MetricRegistry
from ckmetrics.server import SERVER_NAME, create_server

logger = logging.getLogger(__name__)

mcp_server = create_server()

# path='/' so that the mounted app answers at /mcp
mcp_app = mcp_server.http_app(path="/", transport="streamable-http")


async def health_handler(request):
    """Health check endpoint"""
    return JSONResponse({
        "status": "healthy",
        "server": SERVER_NAME,
        "version": __version__,
        "transport": "streamable-http",
        "endpoints": {
            "mcp": "/mcp",
            "health": "/health",
        },
        "metrics": [metric.NAME for metric in MetricRegistry.all()],
    })


app = Starlette(
    routes=[
        Route("/health", health_handler),
        Mount("/mcp", app=mcp_app),
    ],
    # the MCP session manager starts in the mounted app's lifespan
    lifespan=mcp_app.lifespan,
)


if __name__ == "__main__":
    import uvicorn

    logging.basicConfig(level=DEFAULT_CONFIG.monitoring.log_level, format=DEFAULT_CONFIG.monitoring.log_format)
    port = int(os.getenv("PORT", "8080"))
    logger.warning(f"Serving {SERVER_NAME} {__version__} on 0.0.0.0:{port} (MCP at /mcp/, health at /health)")
    uvicorn.run(app, host="0.0.0.0", port=port, log_level="info")
