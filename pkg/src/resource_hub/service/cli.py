"""Command-line entry point: resource-hub [--config PATH] [--offline-fixtures] [--port N]."""

from __future__ import annotations

import click
import uvicorn

from .app import create_app
from .config import ServiceConfig


@click.command()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="JSON config file; defaults apply when omitted.")
@click.option("--offline-fixtures", is_flag=True,
              help="Run with every external provider mocked (no credentials needed).")
@click.option("--port", type=int, default=None, help="Listen port (overrides config).")
@click.option("--host", type=str, default=None, help="Listen address (overrides config).")
def main(config_path: str | None, offline_fixtures: bool, port: int | None, host: str | None) -> None:
    """Serve the community resource-access platform."""
    config = ServiceConfig.from_file(config_path) if config_path else ServiceConfig()
    if offline_fixtures:
        config.offline_fixtures = True
    if port is not None:
        config.port = port
    if host is not None:
        config.host = host
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")


if __name__ == "__main__":
    main()
