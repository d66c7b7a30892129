import math
import sys

from colorama import Fore, Style
from tabulate import tabulate

import consts
from braids.word import BraidWord
from invariants.values import Entropy, ModuleValue

VERDICT_COLORS = {
    consts.INCONCLUSIVE: Fore.YELLOW,
    consts.NOT_EXCLUDED: Fore.YELLOW,
    consts.FAILS_SUBGROUP: Fore.YELLOW,
    consts.FAILS_GARSIDE_CLAUSE: Fore.YELLOW,
}


def format_value(value) -> str:
    """Text for one record value: 12 significant digits, inf for infinity, lowercase booleans."""
    if isinstance(value, (Entropy, ModuleValue)):
        value = value.value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value) and value > 0:
            return consts.INFINITY_TEXT
        return f"{value:.{consts.SIGNIFICANT_DIGITS}g}"
    if isinstance(value, (tuple, list)):
        return " ".join(format_value(v) for v in value)
    return str(value)


def _kv_line(key, value) -> str:
    text = format_value(value)
    # words and values with spaces are quoted so every line stays one key=value pair
    if isinstance(value, BraidWord) or " " in text:
        return f'{key}="{text}"'
    return f"{key}={text}"


def format_record(record: dict, output_format=consts.OUTPUT_FORMAT_KV) -> str:
    if output_format == consts.OUTPUT_FORMAT_TABLE:
        rows = [(key, format_value(value)) for key, value in record.items()]
        return tabulate(rows, headers=["key", "value"], tablefmt="simple", disable_numparse=True)
    return "\n".join(_kv_line(key, value) for key, value in record.items())


def _colorize(line: str) -> str:
    for verdict, color in VERDICT_COLORS.items():
        if line.endswith("=" + verdict):
            return f"{color}{line}{Style.RESET_ALL}"
    if line.startswith("verdict="):
        return f"{Fore.GREEN}{line}{Style.RESET_ALL}"
    return line


def print_record(record: dict, output_format=consts.OUTPUT_FORMAT_KV):
    text = format_record(record, output_format)
    if output_format == consts.OUTPUT_FORMAT_KV and sys.stdout.isatty():
        text = "\n".join(_colorize(line) for line in text.splitlines())
    print(text)


def print_progress(message: str, verbose: bool):
    if verbose:
        print(message, file=sys.stderr)


def print_warning(message: str):
    print(f"{Fore.YELLOW}warning: {message}{Style.RESET_ALL}", file=sys.stderr)


def print_error(error: Exception):
    print(f"{Fore.RED}{type(error).__name__}: {error}{Style.RESET_ALL}", file=sys.stderr)
