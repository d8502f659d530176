from __future__ import annotations

import argparse
from typing import Any, Dict

from cohomology_bases import cohomology_report
from command import BaseCommand, add_germ_arguments, germ_from_args
from formatting import report_to_dict
from utils import Config


class CohomologyCommand(BaseCommand):
    """Theorem-level dimensions and representatives of H^0, H^1, H^2."""

    help = "explicit cohomology bases of the germ"

    def __init__(self):
        super().__init__("cohomology")

    def add_arguments(self, parser: argparse.ArgumentParser):
        add_germ_arguments(parser)

    def run(self, args: argparse.Namespace, config: Config) -> Dict[str, Any]:
        germ, _ = germ_from_args(args)
        return report_to_dict(germ, cohomology_report(germ))
