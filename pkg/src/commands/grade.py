from __future__ import annotations

import argparse
from typing import Any, Dict

from command import BaseCommand, add_polynomial_arguments, polynomial_from_args
from qpoly import graded_components, is_quasihomogeneous
from utils import Config


class GradeCommand(BaseCommand):
    """Split a polynomial into its quasihomogeneous components."""

    help = "quasihomogeneous components of a polynomial"

    def __init__(self):
        super().__init__("grade")

    def add_arguments(self, parser: argparse.ArgumentParser):
        add_polynomial_arguments(parser)

    def run(self, args: argparse.Namespace, config: Config) -> Dict[str, Any]:
        f, w = polynomial_from_args(args)
        components = graded_components(f, w)
        return {
            "weights": [w.w1, w.w2],
            "f": f.to_text(w),
            "quasidegree": is_quasihomogeneous(f, w) if f else None,
            "components": {str(k): part.to_text(w) for k, part in components.items()},
        }
