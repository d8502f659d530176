from __future__ import annotations

import argparse
from typing import Any, Dict

from command import BaseCommand, add_germ_arguments, germ_from_args, natural
from formatting import rational_text
from normal_forms import normalize, verify_normalization
from qpoly import parse_poly
from utils import Config, logger


class NormalizeCommand(BaseCommand):
    """Normal form constant*f*(1+h) of f*(1+u) and the jet of the coordinate change."""

    help = "normalize f*(1+u) to constant*f*(1+h)"

    def __init__(self):
        super().__init__("normalize")

    def add_arguments(self, parser: argparse.ArgumentParser):
        add_germ_arguments(parser, with_h=False)
        parser.add_argument("--unit", default="0", help="perturbation u of the multiplier 1+u")
        parser.add_argument("--order", type=natural, help="multiplier degree to normalize through (default 2d + max(w))")

    def run(self, args: argparse.Namespace, config: Config) -> Dict[str, Any]:
        germ, _ = germ_from_args(args)
        f, w = germ.f, germ.weights
        u = parse_poly(args.unit)
        result = normalize(f, u, w, args.order)
        check = verify_normalization(f, u, result)
        if not check.passed:
            logger.error(f"pushforward residual of order {check.residual_order} within {check.checked_through}")
        return {
            "weights": [w.w1, w.w2],
            "f": f.to_text(w),
            "unit": u.to_text(w),
            "d": germ.d,
            "s": germ.s,
            "constant": rational_text(result.constant),
            "h": result.h_out.to_text(w),
            "phi": [result.phi.phi1.to_text(w), result.phi.phi2.to_text(w)],
            "order": result.order,
            "check": {
                "residual_order": check.residual_order,
                "passed": check.passed,
                "checked_through": check.checked_through,
            },
        }

    def exit_code(self, payload: Dict[str, Any]) -> int:
        return 0 if payload["check"]["passed"] else 1
