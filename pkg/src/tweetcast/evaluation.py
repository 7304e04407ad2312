"""Scoring forecasts against actual results and a prior-election baseline."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .model import Forecast, pct

DEFAULT_SWING_STATES = ("Colorado", "Florida", "Iowa", "Ohio")
REPORT_HEADER = ("state", "predicted", "actual", "ae", "baseline", "ae_baseline")


class EvaluationError(ValueError):
    pass


def _as_shares(x: Forecast | Mapping[str, float]) -> dict[str, float]:
    return x.shares(1) if isinstance(x, Forecast) else dict(x)


def _check_keys(**tables: Mapping[str, float]) -> None:
    union = set().union(*map(set, tables.values()))
    problems = [f"{name} missing {sorted(union - set(t))}"
                for name, t in tables.items() if union - set(t)]
    if problems:
        raise EvaluationError("state keys differ: " + "; ".join(problems))


def absolute_errors(predicted: Forecast | Mapping[str, float],
                    actual: Mapping[str, float]) -> dict[str, float]:
    pred = _as_shares(predicted)
    _check_keys(predicted=pred, actual=actual)
    return {state: abs(p - actual[state]) for state, p in pred.items()}


def mae(errors: Mapping[str, float] | Iterable[float]) -> float:
    values = list(errors.values()) if isinstance(errors, Mapping) else list(errors)
    if not values:
        raise EvaluationError("mean absolute error of an empty set")
    return math.fsum(values) / len(values)


@dataclass(frozen=True)
class ReportRow:
    state: str
    predicted: float
    actual: float
    ae: float
    baseline: float
    ae_baseline: float


@dataclass
class EvaluationReport:
    rows: list[ReportRow]
    mae: float
    mae_baseline: float
    swing: dict[str, float] = field(default_factory=dict)

    @property
    def n_states(self) -> int:
        return len(self.rows)

    @property
    def beats_baseline(self) -> bool:
        return self.mae < self.mae_baseline

    def summary(self) -> str:
        return (f"MAE model={pct(self.mae)}% baseline={pct(self.mae_baseline)}% "
                f"beats_baseline={str(self.beats_baseline).lower()}")

    def to_dict(self) -> dict:
        return {
            "n_states": self.n_states,
            "mae": self.mae,
            "mae_baseline": self.mae_baseline,
            "beats_baseline": self.beats_baseline,
            "swing_margins": dict(self.swing),
            "rows": [r.__dict__ for r in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(REPORT_HEADER)
        for r in self.rows:
            w.writerow([r.state, repr(r.predicted), repr(r.actual), repr(r.ae),
                        repr(r.baseline), repr(r.ae_baseline)])
        w.writerow([])
        w.writerow(["MAE", "", "", repr(self.mae), "", repr(self.mae_baseline)])
        w.writerow(["beats_baseline", str(self.beats_baseline).lower()])
        return buf.getvalue()


def compare(model_forecast: Forecast | Mapping[str, float],
            baseline: Forecast | Mapping[str, float],
            actual: Mapping[str, float],
            swing_states: Sequence[str] = DEFAULT_SWING_STATES) -> EvaluationReport:
    """Per-state absolute errors of model and baseline against the actuals.

    Rows follow the model's state order. Swing margins are |share_1 - share_2|
    of the model forecast for whichever listed states are present.
    """
    pred = _as_shares(model_forecast)
    base = _as_shares(baseline)
    _check_keys(predicted=pred, actual=actual, baseline=base)
    rows = [
        ReportRow(s, pred[s], actual[s], abs(pred[s] - actual[s]),
                  base[s], abs(base[s] - actual[s]))
        for s in pred
    ]
    if isinstance(model_forecast, Forecast):
        margins = {f.state: f.margin for f in model_forecast.states}
    else:
        margins = {s: abs(2.0 * p - 1.0) for s, p in pred.items()}
    swing = {s: margins[s] for s in swing_states if s in margins}
    return EvaluationReport(rows, mae([r.ae for r in rows]),
                            mae([r.ae_baseline for r in rows]), swing)


def read_shares(path, column: str | None = None) -> dict[str, float]:
    """Candidate-1 shares per state from a forecast JSON or a CSV.

    CSV files need a ``state`` column and one share column; without
    `column` the first of share, share_1, predicted, actual, dem_share is
    used. Values are fractions, or percents when the column ends in _pct.
    """
    path = str(path)
    if path.endswith(".json"):
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        return {row["state"]: float(row["share_1"]) for row in doc["states"]}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        if "state" not in header:
            raise EvaluationError(f"{path}: no state column")
        if column is None:
            options = ("share", "share_1", "predicted", "actual", "dem_share",
                       "share_1_pct", "predicted_pct", "actual_pct")
            column = next((c for c in options if c in header), None)
            if column is None:
                raise EvaluationError(f"{path}: no share column in {header}")
        elif column not in header:
            raise EvaluationError(f"{path}: no column {column!r}")
        scale = 100.0 if column.endswith("_pct") else 1.0
        out: dict[str, float] = {}
        for row in reader:
            state = row["state"].strip()
            if state in out:
                raise EvaluationError(f"{path}: duplicate state {state!r}")
            try:
                out[state] = float(row[column]) / scale
            except ValueError:
                raise EvaluationError(f"{path}: {state}: {row[column]!r} is not a number") from None
    return out


@dataclass(frozen=True)
class ComparisonTable:
    predicted: dict[str, float]
    actual: dict[str, float]
    baseline: dict[str, float]
    ae: dict[str, float]
    ae_baseline: dict[str, float]


def read_comparison_table(path) -> ComparisonTable:
    """Load a published comparison table (percent columns) as fractions."""
    cols = ("predicted_pct", "actual_pct", "baseline_pct", "ae_pct", "ae_baseline_pct")
    return ComparisonTable(*(read_shares(path, c) for c in cols))
