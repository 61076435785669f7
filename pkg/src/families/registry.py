"""
Family Registry

Access to config/family_registry.py with the usual enable/priority handling.

Usage:
    from src.families.registry import get_enabled_families

    for name, info in get_enabled_families().items():
        certify_family(family_spec(name))
"""

from typing import Dict, List

from config.family_registry import FAMILY_REGISTRY
from src.algebra.field import FieldTag


def get_all_families() -> Dict[str, Dict]:
    """
    Returns every registered family, sorted by priority.

    Each entry has:
    - bv: block vector (None for the parametric families)
    - acting, target: group and target set the family lives in
    - field, sample: default certification field and t values
    - description: where the parameter sits
    """
    return dict(sorted(FAMILY_REGISTRY.items(), key=lambda item: item[1]["priority"]))


def get_enabled_families() -> Dict[str, Dict]:
    return {name: dict(info) for name, info in get_all_families().items() if info["enabled"]}


def default_sample(name: str, field: FieldTag) -> List:
    """Registry sample for a family; "all" expands to every element of a finite field."""
    sample = FAMILY_REGISTRY[name]["sample"]
    if sample == "all":
        if not field.is_finite:
            raise ValueError(f"family {name} samples the whole field, which needs GF(q)")
        return [field.to_int(a) for a in field.elements()]
    return list(sample)


if __name__ == "__main__":
    from rich.console import Console
    from rich.table import Table

    console = Console()
    table = Table(title="Registered Families", header_style="bold cyan")
    table.add_column("Priority", justify="right")
    table.add_column("Name", style="green")
    table.add_column("bv")
    table.add_column("Acting")
    table.add_column("Field")
    table.add_column("Description")
    for name, info in get_all_families().items():
        bv = ",".join(map(str, info["bv"])) if info["bv"] else "(k, n-k)"
        table.add_row(str(info["priority"]), name, bv, info["acting"], info["field"], info["description"])
    console.print(table)
