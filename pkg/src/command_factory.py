"""Factory for creating and managing poisson2 commands."""

from typing import Dict, List, Optional, Type

from command import BaseCommand
from commands.catalog import CatalogCommand
from commands.cohomology import CohomologyCommand
from commands.crosscheck import CrosscheckCommand
from commands.grade import GradeCommand
from commands.milnor import MilnorCommand
from commands.normalize import NormalizeCommand
from commands.oracle import OracleCommand
from utils import logger


class CommandFactory:
    """Manages registration and creation of commands."""

    _commands: Dict[str, Type[BaseCommand]] = {
        "grade": GradeCommand,
        "milnor": MilnorCommand,
        "cohomology": CohomologyCommand,
        "oracle": OracleCommand,
        "crosscheck": CrosscheckCommand,
        "normalize": NormalizeCommand,
        "catalog": CatalogCommand,
    }

    _instances: Dict[str, BaseCommand] = {}

    @classmethod
    def get_command(cls, name: str) -> Optional[BaseCommand]:
        """
        Get or create a command instance by name.

        Args:
            name: Command name

        Returns:
            Command instance or None if not found
        """
        if name in cls._instances:
            return cls._instances[name]

        if name in cls._commands:
            instance = cls._commands[name]()
            cls._instances[name] = instance
            return instance

        logger.warning(f"Command '{name}' not found")
        return None

    @classmethod
    def get_available_commands(cls) -> List[str]:
        """Get list of registered command names."""
        return list(cls._commands.keys())
