"""
Reproduce the Published Tables

Runs the Prefect batch flow that writes both energy tables, the gamma sweeps
of the ground state and the gamma = 0 cross-check as CSV files:

    python reproduce_tables.py            # into results/
    python reproduce_tables.py out/       # into out/

Requirements:
pip install -r requirements.txt
"""

import sys

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

from src.workflows import reproduce_tables


# ============================================================================
# MAIN EXECUTION
# ============================================================================

if __name__ == "__main__":
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "results"

    print("\n" + "=" * 60)
    print("Reproducing energy tables")
    print("=" * 60)

    codes = reproduce_tables(out_dir)

    print("\n" + "=" * 60)
    for name, code in codes.items():
        print(f"  {'✅' if code == 0 else '❌'} {out_dir}/{name}.csv")
    print("=" * 60)
    sys.exit(max(codes.values(), default=0))
