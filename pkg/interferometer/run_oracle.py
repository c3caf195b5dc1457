import json
import os

from interferometer.exceptions import OracleToleranceFailure
from interferometer.filemanager import Filemanager
from interferometer.format import Format
from interferometer.models import DimensionlessParams
from interferometer.oracle import build_report, write_report


def default_report_path() -> str:
    return f"{Filemanager.output_folder}/oracle_report.json"


def print_report(report: dict) -> None:
    grid = report["grid"]
    print(f"\n----- ORACLE ON {grid['n_points']} POINTS PER AXIS, n_max={grid['n_max']} -----")
    for name in ("g0", "g1_abs", "gamma1"):
        analytic = Format.number(report["analytic"][name])
        numeric = Format.number(report["numeric"][name])
        print(f"> {name:<8} analytic {analytic:<20} numeric {numeric}")

    for name, passed in report["checks"].items():
        print(f"  - {name}: {'pass' if passed else 'FAIL'}")


def cmd_oracle(
    params: DimensionlessParams,
    n_points: int | None = None,
    extent: float | None = None,
    n_max: int | None = None,
    out: str | None = None,
    as_json: bool = False,
) -> dict:
    """Run the oracle, always write the report, then fail if any check did not pass"""
    report = build_report(params, n_points, extent, n_max)

    out = out or default_report_path()
    os.makedirs(os.path.dirname(out) or ".", exist_ok=True)
    write_report(report, out)

    if as_json:
        with open(out, "r", encoding="utf8") as file:
            print(json.dumps(json.load(file), indent=2))
    else:
        print_report(report)

    if not report["passed"]:
        raise OracleToleranceFailure(report["failed"])

    return report
