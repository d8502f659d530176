from __future__ import annotations

import argparse
from typing import Any, Dict

from command import BaseCommand, add_germ_arguments, germ_from_args, natural
from formatting import crosscheck_to_dict, report_to_dict
from graded_oracle import crosscheck
from utils import Config, logger


class CrosscheckCommand(BaseCommand):
    """Theorem against oracle; a disagreement is reported, not raised."""

    help = "compare theorem-level and brute-force dimensions"

    def __init__(self):
        super().__init__("crosscheck")

    def add_arguments(self, parser: argparse.ArgumentParser):
        add_germ_arguments(parser)
        parser.add_argument("--cutoff", type=natural, help="highest function degree (default 2d + max(w))")

    def run(self, args: argparse.Namespace, config: Config) -> Dict[str, Any]:
        germ, label = germ_from_args(args)
        record = crosscheck(
            germ,
            args.cutoff,
            label=label,
            jobs=args.jobs or config.get("jobs", 1),
            margin=config.get("stabilization_margin"),
        )
        if record.agreed:
            logger.info(f"theorem and oracle agree on {record.theorem}")
        payload = report_to_dict(germ, record.theorem_report, record.oracle_report)
        if label is not None:
            payload["label"] = str(label)
        payload["crosscheck"] = crosscheck_to_dict(record)
        return payload
