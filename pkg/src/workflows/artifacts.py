"""
CSV Artifacts

Comma-separated, '.' decimal, header row, metadata as leading '#' lines.
Nothing time-dependent is written, so identical runs give identical bytes.
"""

import csv
import io
import sys
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence, Union

from src import __version__


def render_csv(metadata: Mapping[str, str], header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    buffer.write(f"# tool = displaced-mass-spectra {__version__}\n")
    for key, value in metadata.items():
        buffer.write(f"# {key} = {value}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def write_csv(
    path: Optional[Union[str, Path]],
    metadata: Mapping[str, str],
    header: Sequence[str],
    rows: Iterable[Sequence],
) -> str:
    """Write the CSV to path, or to stdout when path is None. Returns the text."""
    text = render_csv(metadata, header, rows)
    if path is None:
        sys.stdout.write(text)
    else:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    return text
