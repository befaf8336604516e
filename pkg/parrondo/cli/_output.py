import csv
import json
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, Optional, Sequence, TextIO

from parrondo.models import OutputFormats, RunConfig
from parrondo.version import __version__

CSV_DIGITS = 12


def format_value(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.{CSV_DIGITS}g}"
    return str(value)


@contextmanager
def open_output(path: Optional[Path]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as stream:
        yield stream


def write_csv(stream: TextIO, fieldnames: Sequence[str], rows: Sequence[dict[str, Any]]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(fieldnames)
    for row in rows:
        writer.writerow([format_value(row.get(name, "")) for name in fieldnames])


def write_json(stream: TextIO, document: dict[str, Any]) -> None:
    # json writes the shortest repr of each float, which round-trips binary64
    stream.write(json.dumps(document, indent=2, ensure_ascii=False))
    stream.write("\n")


def json_document(config: RunConfig, results: Any, **extra: Any) -> dict[str, Any]:
    return {"version": __version__, "config": config.echo(), "results": results, **extra}


def emit(
    config: RunConfig,
    fieldnames: Sequence[str],
    rows: Sequence[dict[str, Any]],
    document: Optional[dict[str, Any]] = None,
) -> None:
    """Write rows as csv, or the json document (rows when none is given)."""
    with open_output(config.output_path) as stream:
        match config.output_format:
            case OutputFormats.CSV:
                write_csv(stream, fieldnames, rows)
            case OutputFormats.JSON:
                write_json(stream, document or json_document(config, list(rows)))
