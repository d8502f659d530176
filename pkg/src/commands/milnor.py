from __future__ import annotations

import argparse
from typing import Any, Dict

from command import BaseCommand, add_germ_arguments, germ_from_args
from formatting import germ_to_dict, milnor_to_dict
from milnor_algebra import milnor_data, resonant_monomials
from utils import Config


class MilnorCommand(BaseCommand):
    """Monomial basis and codimension of the Milnor algebra of f."""

    help = "Milnor algebra basis, codimension and resonant monomials"

    def __init__(self):
        super().__init__("milnor")

    def add_arguments(self, parser: argparse.ArgumentParser):
        add_germ_arguments(parser)

    def run(self, args: argparse.Namespace, config: Config) -> Dict[str, Any]:
        germ, _ = germ_from_args(args)
        resonant = resonant_monomials(germ.weights, germ.d)
        payload = germ_to_dict(germ)
        payload["r"] = len(resonant)
        payload["resonant"] = [m.to_text() or "1" for m in resonant]
        payload.update(milnor_to_dict(milnor_data(germ.f, germ.weights)))
        return payload
