"""
Display the classifier tables and the family registry.
Quick utility to see which cases are enabled and in which order they are tried.
"""

import sys
import os

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from rich.console import Console
from rich.table import Table

from config.classifier_tables import (
    ALGEBRA_TYPE_FINITE_PAIRS,
    DELTA_TYPE_FINITE_PAIRS,
    MINIMAL_INFINITE_CASES,
)
from src.classifier.tables import get_all_finite_families, get_enabled_minimal_infinite_cases
from src.families.registry import get_all_families

console = Console()


def main():
    console.rule("[bold cyan]CLASSIFIER TABLES[/bold cyan]")

    enabled = get_enabled_minimal_infinite_cases()
    console.print(f"Status: {len(enabled)}/{len(MINIMAL_INFINITE_CASES)} minimal infinite cases enabled")
    table = Table(title="Minimal Infinite Block Vectors", header_style="bold cyan")
    table.add_column("Priority", justify="right")
    table.add_column("Name", style="green")
    table.add_column("Blocks")
    table.add_column("Description")
    for name, info in MINIMAL_INFINITE_CASES.items():
        style = "" if name in enabled else "dim"
        table.add_row(str(info["priority"]), name, str(info["blocks"]), info["description"], style=style)
    console.print(table)

    table = Table(title="Maximal Finite Families", header_style="bold cyan")
    table.add_column("Name", style="green")
    table.add_column("Template")
    table.add_column("k_min", justify="right")
    table.add_column("Description")
    for name, info in get_all_finite_families().items():
        table.add_row(name, str(info["template"]), str(info["k_min"]), info["description"])
    console.print(table)

    console.print(f"Finite A(p, x) beyond p = 1 or x = 1: {ALGEBRA_TYPE_FINITE_PAIRS}")
    console.print(f"Finite Delta-filtered grids beyond p = 1 or n <= 2: {DELTA_TYPE_FINITE_PAIRS}")

    console.rule("[bold cyan]FAMILIES[/bold cyan]")
    table = Table(header_style="bold cyan")
    table.add_column("Name", style="green")
    table.add_column("bv")
    table.add_column("Acting")
    table.add_column("Target")
    table.add_column("Field")
    table.add_column("Sample")
    for name, info in get_all_families().items():
        bv = ",".join(map(str, info["bv"])) if info["bv"] else "(k, n-k)"
        table.add_row(name, bv, info["acting"], info["target"], info["field"], str(info["sample"]))
    console.print(table)


if __name__ == "__main__":
    main()
