"""
Units Reference

Writes docs/UNITS.md from the pinned physical constants and the registered
presets, so the document never drifts from the code:

    python units_reference.py
"""

from pathlib import Path

from src.model import units_reference

TARGET = Path(__file__).parent / "docs" / "UNITS.md"

if __name__ == "__main__":
    TARGET.write_text(units_reference(), encoding="utf-8")
    print(f"Wrote {TARGET}")
