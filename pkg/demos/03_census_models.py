"""
Census-corrected forecasts
==========================

Twitter support E only speaks for the twitter segment (model 2) or for
the whole online population (model 1). Everybody else keeps the prior
party split.
"""

import numpy as np

from tweetcast import TwitterSupport, baseline_forecast, forecast, state_support
from tweetcast.census import StateProfile, load_fixture_table

e = TwitterSupport.fixed(0.58)
ohio = StateProfile("Ohio", twitter_frac=0.13, internet_not_twitter_frac=0.68,
                    prior_share={"dem": 0.5260, "rep": 0.4740}, electoral_votes=18)

for model in (1, 2):
    for mode in ("normalized", "literal"):
        f = state_support(ohio, e, model, mode)
        print(model, mode, np.round(f.share, 4), "sum", round(sum(f.share), 4))
# literal weights give shares adding to 1 + twitter_frac

table = load_fixture_table()
for label, f in [("baseline", baseline_forecast(table)),
                 ("model 1", forecast(table, e, 1)),
                 ("model 2", forecast(table, e, 2))]:
    print(f"{label:9s} popular {f.popular_vote[0]:.4f}  EV {f.electoral_votes}  tied {f.tied_ev}")

# how far model 2 moves each state away from its prior
m2 = forecast(table, e, 2).shares()
base = baseline_forecast(table).shares()
shift = np.array([m2[s] - base[s] for s in table.states])
print("shift min/max", shift.min().round(4), shift.max().round(4))

# the first lines of the forecast table
print(forecast(table, e, 2).to_csv()[:200])
