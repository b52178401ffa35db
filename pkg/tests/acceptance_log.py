"""Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""

LINES: dict[int, str] = {}


def record(number: int, ok: bool, text: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {text}"
    LINES[number] = line
    print(line)
