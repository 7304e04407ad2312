"""
Checking published state tables
===============================

The bundled comparison table holds predicted, actual and baseline
shares for 51 states. MAE, per-state errors and the electoral college
can all be recomputed from it.
"""

import csv

from tweetcast import compare, electoral_college, two_party_share
from tweetcast.census import fixture_path, load_fixture_table
from tweetcast.evaluation import read_comparison_table
from tweetcast.model import StateForecast, pct

t = read_comparison_table(fixture_path("published_comparison.csv"))
report = compare(t.predicted, t.baseline, t.actual)
print(report.summary())
for s in ("Alabama", "Utah", "Ohio"):
    print(s, pct(t.predicted[s]), pct(t.actual[s]), "AE", pct(abs(t.predicted[s] - t.actual[s])))
print("swing margins", {k: pct(v) for k, v in report.swing.items()})

# winner-take-all on the two published model tables
table = load_fixture_table()
for name in ("published_model1.csv", "published_model2.csv"):
    with open(fixture_path(name)) as fh:
        states = [StateForecast.from_shares(r["state"], float(r["share_1_pct"]) / 100,
                                            float(r["share_2_pct"]) / 100)
                  for r in csv.DictReader(fh)]
    counts, shares, tied = electoral_college(states, table)
    # 538 EVs cannot produce every two-decimal percentage exactly
    print(name, counts, pct(shares[0]))

print("two-party", pct(two_party_share(0.506, 0.4784)[0]))
