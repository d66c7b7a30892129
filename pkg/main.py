import sys

from colorama import init

from ui.cli import run

# init colorama for cross-platform colored output
init()

if __name__ == "__main__":
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        print("\n\nProgram interrupted. Exiting...", file=sys.stderr)
        sys.exit(1)
