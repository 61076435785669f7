"""
Display the arithmetic and oracle budgets.
"""

import sys
import os

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from rich.console import Console
from rich.table import Table

import config.algebra_params as algebra_params
import config.io_paths as io_paths
import config.oracle_params as oracle_params

console = Console()


def _constants(module):
    return {name: getattr(module, name) for name in dir(module) if name.isupper()}


def main():
    for title, module in (
        ("Algebra", algebra_params),
        ("Oracle", oracle_params),
        ("Paths", io_paths),
    ):
        table = Table(title=f"{title} Parameters ({module.__name__})", header_style="bold cyan")
        table.add_column("Name", style="green")
        table.add_column("Value", justify="right")
        for name, value in _constants(module).items():
            table.add_row(name, str(value))
        console.print(table)


if __name__ == "__main__":
    main()
