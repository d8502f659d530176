from __future__ import annotations

import argparse
from typing import Any, Dict

from command import BaseCommand, add_germ_arguments, germ_from_args
from formatting import germ_to_dict
from normal_forms import catalog_germ, catalog_labels, is_as_printed
from utils import Config


class CatalogCommand(BaseCommand):
    """Normal forms of the simple germs; weights are derived, never given."""

    help = "simple-germ normal forms"

    def __init__(self):
        super().__init__("catalog")

    def add_arguments(self, parser: argparse.ArgumentParser):
        add_germ_arguments(parser)

    def run(self, args: argparse.Namespace, config: Config) -> Dict[str, Any]:
        if args.catalog:
            germ, label = germ_from_args(args)
            labels = [(label, germ)]
        else:
            labels = [(label, catalog_germ(label, args.d_form)) for label in catalog_labels(args.lam)]
        entries = []
        for label, germ in labels:
            entry = {"label": str(label)}
            entry.update(germ_to_dict(germ))
            entry["as_printed"] = is_as_printed(label) and not args.d_form
            entries.append(entry)
        return {"entries": entries}
