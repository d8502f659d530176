"""Base class for poisson2 commands and shared germ-argument handling."""

from __future__ import annotations

import argparse
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from errors import InputError
from normal_forms import AdeLabel, catalog_germ
from poisson_calculus import PoissonGerm
from qpoly import ZERO, Poly, Weights, parse_poly
from utils import Config


def rational(text: str) -> Fraction:
    """argparse type for ``--lambda``."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def natural(text: str) -> int:
    if not (text.isascii() and text.isdigit()):
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return int(text)


class BaseCommand(ABC):
    """Abstract base class for all commands."""

    help = ""

    def __init__(self, name: str):
        """
        Initialize command.

        Args:
            name: Command name on the command line
        """
        self.name = name

    def add_arguments(self, parser: argparse.ArgumentParser):
        """Register the command's flags."""

    @abstractmethod
    def run(self, args: argparse.Namespace, config: Config) -> Dict[str, Any]:
        """
        Execute the command.

        Args:
            args: Parsed command line
            config: Loaded configuration

        Returns:
            The report payload (JSON-ready)
        """
        pass

    def exit_code(self, payload: Dict[str, Any]) -> int:
        return 0


def add_polynomial_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--weights", help="weights of x and y as w1,w2")
    parser.add_argument("--f", dest="f", help="quasihomogeneous polynomial f")


def add_germ_arguments(parser: argparse.ArgumentParser, with_h: bool = True):
    add_polynomial_arguments(parser)
    if with_h:
        parser.add_argument("--h", dest="h", help="multiplier term h of degree d - w1 - w2")
    parser.add_argument("--catalog", help="simple germ FAMILY:INDEX[:SIGN], e.g. D:5 or A:3:-")
    parser.add_argument("--lambda", dest="lam", type=rational, default=Fraction(0), help="modulus of the catalog germ")
    parser.add_argument("--d-form", dest="d_form", action="store_true", help="build D_2p with x^2*y +- y^(2p-1)")
    parser.add_argument("--field", choices=("R", "C"), default="R", help="ground field of the catalog (sign drops over C)")


def weights_from_args(args: argparse.Namespace) -> Weights:
    if not args.weights:
        raise InputError("--weights is required unless --catalog is given")
    return Weights.parse(args.weights)


def polynomial_from_args(args: argparse.Namespace) -> Tuple[Poly, Weights]:
    if not args.f:
        raise InputError("--f is required unless --catalog is given")
    return parse_poly(args.f), weights_from_args(args)


def germ_from_args(args: argparse.Namespace) -> Tuple[PoissonGerm, Optional[AdeLabel]]:
    """The germ named on the command line, and its catalog label when there is one."""
    if getattr(args, "catalog", None):
        if args.f or getattr(args, "h", None):
            raise InputError("--catalog cannot be combined with --f or --h")
        label = AdeLabel.parse(args.catalog, args.lam, args.field)
        return catalog_germ(label, args.d_form), label
    f, w = polynomial_from_args(args)
    h_text = getattr(args, "h", None)
    h = parse_poly(h_text) if h_text else ZERO
    return PoissonGerm(f, h, w), None
