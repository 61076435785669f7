"""
Classifier Table Registry

Central access to the finiteness tables in config/classifier_tables.py,
with the same enable/priority handling as the other registries.

Usage:
    from src.classifier.tables import get_enabled_minimal_infinite_cases

    for name, info in get_enabled_minimal_infinite_cases().items():
        blocks = info["blocks"]
"""

from typing import Dict, Tuple

from config.classifier_tables import MAXIMAL_FINITE_FAMILIES, MINIMAL_INFINITE_CASES


def _sorted_enabled(table: Dict[str, Dict]) -> Dict[str, Dict]:
    enabled = {
        name: dict(info) for name, info in table.items() if info.get("enabled", True)
    }
    return dict(sorted(enabled.items(), key=lambda item: item[1]["priority"]))


def get_all_minimal_infinite_cases() -> Dict[str, Dict]:
    """
    Returns every minimal infinite block vector, sorted by priority.

    Each entry has:
    - blocks: the block sizes
    - priority: lookup order (lower = tried first)
    - description: source of the infinite family
    """
    return dict(
        sorted(MINIMAL_INFINITE_CASES.items(), key=lambda item: item[1]["priority"])
    )


def get_enabled_minimal_infinite_cases() -> Dict[str, Dict]:
    return _sorted_enabled(MINIMAL_INFINITE_CASES)


def get_all_finite_families() -> Dict[str, Dict]:
    return dict(
        sorted(MAXIMAL_FINITE_FAMILIES.items(), key=lambda item: item[1]["priority"])
    )


def get_enabled_finite_families() -> Dict[str, Dict]:
    return _sorted_enabled(MAXIMAL_FINITE_FAMILIES)


def instantiate(template: Tuple, k: int) -> Tuple[int, ...]:
    """Replace the free block "k" of a family template."""
    return tuple(k if part == "k" else part for part in template)


if __name__ == "__main__":
    from rich.console import Console
    from rich.table import Table

    console = Console()

    console.print("\n[bold cyan]Minimal Infinite Block Vectors:[/bold cyan]")
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Case", style="cyan")
    table.add_column("Blocks", justify="center")
    table.add_column("Priority", justify="center")
    table.add_column("Description")
    for name, info in get_all_minimal_infinite_cases().items():
        table.add_row(name, str(info["blocks"]), str(info["priority"]), info["description"])
    console.print(table)

    console.print("\n[bold green]Maximal Finite Families:[/bold green]")
    table2 = Table(show_header=True, header_style="bold green")
    table2.add_column("Family", style="green")
    table2.add_column("Template", justify="center")
    table2.add_column("Status", justify="center")
    enabled = get_enabled_finite_families()
    for name, info in get_all_finite_families().items():
        status = "✓ ENABLED" if name in enabled else "✗ DISABLED"
        table2.add_row(name, str(info["template"]), status)
    console.print(table2)
