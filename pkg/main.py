"""
parorbit Entry Point

Hands the command line to the click group in src/cli/main.py.

    python main.py classify --bv 5,4
    python main.py orbits --bv 1,2 --q 3 --json
"""

from src.cli import cli


def main():
    cli(prog_name="parorbit")


if __name__ == "__main__":
    main()
