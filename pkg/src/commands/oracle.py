from __future__ import annotations

import argparse
from typing import Any, Dict

from command import BaseCommand, add_germ_arguments, germ_from_args, natural
from formatting import oracle_as_report, report_to_dict
from graded_oracle import oracle_report
from milnor_algebra import milnor_data, resonant_monomials
from utils import Config


class OracleCommand(BaseCommand):
    """Cohomology dimensions by brute-force ranks of the cochain complex."""

    help = "brute-force cohomology dimensions"

    def __init__(self):
        super().__init__("oracle")

    def add_arguments(self, parser: argparse.ArgumentParser):
        add_germ_arguments(parser)
        parser.add_argument("--cutoff", type=natural, help="highest function degree (default 2d + max(w))")

    def run(self, args: argparse.Namespace, config: Config) -> Dict[str, Any]:
        germ, _ = germ_from_args(args)
        report = oracle_report(
            germ,
            args.cutoff,
            margin=config.get("stabilization_margin"),
            jobs=args.jobs or config.get("jobs", 1),
        )
        r = len(resonant_monomials(germ.weights, germ.d))
        c = milnor_data(germ.f, germ.weights).c
        return report_to_dict(germ, oracle_as_report(report, r, c), report)
