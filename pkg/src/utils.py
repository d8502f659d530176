"""Utility functions for poisson2."""

import json
import os
import logging
from typing import Any, Dict, Optional


# Configure logging
def setup_logging(level=logging.WARNING, log_file: Optional[str] = None):
    """Setup application logging.

    Reports go to standard output, so log records always go to standard error
    (and optionally to a file).
    """
    handlers = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers
    )
    logging.getLogger("Poisson2").setLevel(level)


logger = logging.getLogger("Poisson2")


class Config:
    """Configuration defaults, optionally overridden by a JSON file."""

    def __init__(self, config_file: Optional[str] = None):
        """Initialize configuration manager."""
        self.config_file = os.path.abspath(config_file) if config_file else None
        self.config: Dict[str, Any] = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from file."""
        defaults = {
            "format": "text",
            "jobs": 1,
            "log_level": "WARNING",
            "log_file": None,
            "stabilization_margin": None,
        }

        if self.config_file and os.path.exists(self.config_file):
            try:
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    saved_config = json.load(f)
                    # Merge saved config with defaults
                    defaults.update(saved_config)
                    return defaults
            except Exception as e:
                logger.error(f"Error loading config: {e}")
        elif self.config_file:
            logger.warning(f"Config file not found: {self.config_file}")

        return defaults

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value."""
        value = self.config.get(key, default)
        return default if value is None else value
