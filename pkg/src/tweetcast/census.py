"""Per-state demographic inputs: twitter and internet penetration, prior
party support, electoral votes and turnout weights."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterator, Mapping

PARTIES = ("dem", "rep")
PRIOR_SUM_TOL = 1e-6

CENSUS_COLUMNS = ("state", "twitter_frac", "internet_not_twitter_frac")
PRIORS_COLUMNS = ("state", "dem_share", "rep_share")
APPORTIONMENT_COLUMNS = ("state", "electoral_votes")
WEIGHTS_COLUMNS = ("state", "turnout_weight")


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class StateProfile:
    state: str
    twitter_frac: float
    internet_not_twitter_frac: float
    prior_share: Mapping[str, float]
    electoral_votes: int
    turnout_weight: float = 1.0

    @property
    def online_frac(self) -> float:
        return self.twitter_frac + self.internet_not_twitter_frac


@dataclass(frozen=True)
class Finding:
    state: str
    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.state}: {self.field}: {self.message}"


@dataclass
class ValidationReport:
    findings: list[Finding] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.findings

    def __str__(self) -> str:
        lines = [str(f) for f in self.findings] + [f"note: {n}" for n in self.notes]
        return "\n".join(lines) if lines else "no findings"


@dataclass(frozen=True)
class StateTable:
    profiles: tuple[StateProfile, ...]
    equal_weights: bool = False  # turnout weights fell back to 1.0 per state

    @property
    def n_states(self) -> int:
        return len(self.profiles)

    @property
    def total_electoral_votes(self) -> int:
        return sum(p.electoral_votes for p in self.profiles)

    def __len__(self) -> int:
        return len(self.profiles)

    def __iter__(self) -> Iterator[StateProfile]:
        return iter(self.profiles)

    def __getitem__(self, state: str) -> StateProfile:
        for p in self.profiles:
            if p.state == state:
                return p
        raise KeyError(state)

    @property
    def states(self) -> list[str]:
        return [p.state for p in self.profiles]


def _is_fraction(x: float) -> bool:
    return isinstance(x, (int, float)) and math.isfinite(x) and 0.0 <= x <= 1.0


def validate_profiles(table: StateTable | list[StateProfile]) -> ValidationReport:
    """Check every profile invariant and collect findings instead of raising."""
    profiles = table.profiles if isinstance(table, StateTable) else tuple(table)
    report = ValidationReport()
    if not profiles:
        report.findings.append(Finding("*", "profiles", "table is empty"))
    seen: set[str] = set()
    for p in profiles:
        add = lambda fld, msg: report.findings.append(Finding(p.state, fld, msg))  # noqa: E731
        if not p.state:
            add("state", "empty state id")
        if p.state in seen:
            add("state", "duplicate state id")
        seen.add(p.state)
        for name in ("twitter_frac", "internet_not_twitter_frac"):
            if not _is_fraction(getattr(p, name)):
                add(name, f"{getattr(p, name)!r} not a fraction in [0, 1]")
        if _is_fraction(p.twitter_frac) and _is_fraction(p.internet_not_twitter_frac):
            if p.online_frac > 1.0 + 1e-12:
                add("twitter_frac+internet_not_twitter_frac", f"sum {p.online_frac:.6g} exceeds 1")
        if set(p.prior_share) != set(PARTIES):
            add("prior_share", f"parties {sorted(p.prior_share)} != {list(PARTIES)}")
        else:
            shares = [p.prior_share[k] for k in PARTIES]
            bad = [k for k, v in zip(PARTIES, shares) if not _is_fraction(v)]
            for k in bad:
                add(f"{k}_share", f"{p.prior_share[k]!r} not a fraction in [0, 1]")
            if not bad and abs(sum(shares) - 1.0) > PRIOR_SUM_TOL:
                add("prior_share", f"dem + rep = {sum(shares):.6g}, expected 1")
        ev = p.electoral_votes
        if not isinstance(ev, int) or isinstance(ev, bool) or ev < 1:
            add("electoral_votes", f"{ev!r} is not a positive integer")
        w = p.turnout_weight
        if not (isinstance(w, (int, float)) and math.isfinite(w) and w >= 0):
            add("turnout_weight", f"{w!r} is not a nonnegative number")
    if isinstance(table, StateTable):
        if table.equal_weights:
            report.notes.append("no turnout weights supplied; every state weighted equally")
        if profiles and sum(p.turnout_weight for p in profiles) <= 0:
            report.findings.append(Finding("*", "turnout_weight", "weights sum to zero"))
    return report


def _read_csv(path, columns: tuple[str, ...], label: str) -> dict[str, dict[str, str]]:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = [h.strip() for h in reader.fieldnames or []]
        missing = [c for c in columns if c not in header]
        if missing:
            raise CensusError(f"{label} file {path}: missing columns {missing} (header {header})")
        rows: dict[str, dict[str, str]] = {}
        for lineno, row in enumerate(reader, start=2):
            row = {k.strip(): (v or "").strip() for k, v in row.items() if k}
            state = row["state"]
            if not state:
                raise CensusError(f"{label} file {path}: line {lineno}: empty state")
            if state in rows:
                raise CensusError(f"{label} file {path}: duplicate state {state!r}")
            rows[state] = row
    return rows


def _fraction(value: str, state: str, name: str) -> float:
    try:
        x = float(value)
    except ValueError:
        raise CensusError(f"{state}: {name}: {value!r} is not a number") from None
    if x > 1.0:
        raise CensusError(
            f"{state}: {name} = {value} looks like a percentage; supply fractions in [0, 1]"
        )
    return x


def load_state_profiles(
    census_csv,
    priors_csv,
    apportionment_csv,
    weights_csv=None,
    validate: bool = True,
) -> StateTable:
    """Join the four per-state CSV files into a :class:`StateTable`.

    Rows keep the census file's order; that order also fixes summation
    order downstream. Without `weights_csv` every state gets weight 1.
    With ``validate=False`` invariant violations are left for
    :func:`validate_profiles` to report.
    """
    census = _read_csv(census_csv, CENSUS_COLUMNS, "census")
    priors = _read_csv(priors_csv, PRIORS_COLUMNS, "priors")
    seats = _read_csv(apportionment_csv, APPORTIONMENT_COLUMNS, "apportionment")
    weights = _read_csv(weights_csv, WEIGHTS_COLUMNS, "weights") if weights_csv else None

    keysets = {"census": set(census), "priors": set(priors), "apportionment": set(seats)}
    if weights is not None:
        keysets["weights"] = set(weights)
    union = set().union(*keysets.values())
    problems = [
        f"{label} missing {sorted(union - keys)}"
        for label, keys in keysets.items()
        if union - keys
    ]
    if problems:
        raise CensusError("state keys differ across files: " + "; ".join(problems))

    profiles = []
    for state, row in census.items():
        try:
            ev = int(seats[state]["electoral_votes"])
        except ValueError:
            raise CensusError(
                f"{state}: electoral_votes: {seats[state]['electoral_votes']!r} is not an integer"
            ) from None
        weight = 1.0
        if weights is not None:
            try:
                weight = float(weights[state]["turnout_weight"])
            except ValueError:
                raise CensusError(f"{state}: turnout_weight is not a number") from None
        profiles.append(StateProfile(
            state=state,
            twitter_frac=_fraction(row["twitter_frac"], state, "twitter_frac"),
            internet_not_twitter_frac=_fraction(
                row["internet_not_twitter_frac"], state, "internet_not_twitter_frac"),
            prior_share={
                "dem": _fraction(priors[state]["dem_share"], state, "dem_share"),
                "rep": _fraction(priors[state]["rep_share"], state, "rep_share"),
            },
            electoral_votes=ev,
            turnout_weight=weight,
        ))
    table = StateTable(tuple(profiles), equal_weights=weights is None)
    if validate:
        report = validate_profiles(table)
        if not report.ok:
            raise CensusError("invalid state profiles:\n" + str(report))
    return table


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled fixture file."""
    return Path(str(resources.files("tweetcast.fixtures").joinpath(name)))


def load_fixture_table() -> StateTable:
    """The bundled 2012 table: placeholder penetration rates, 2008 two-party
    priors and the 2012 apportionment, equal turnout weights."""
    return load_state_profiles(
        fixture_path("census_national_2012.csv"),
        fixture_path("priors_2008.csv"),
        fixture_path("apportionment_2012.csv"),
    )
