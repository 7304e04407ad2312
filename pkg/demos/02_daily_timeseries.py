"""
From raw tweets to a daily sentiment series
===========================================

Ingestion drops duplicates, non-English records and tweets that name
neither candidate. What is left is scored and summed per day.
"""

import io
import os
import tempfile

from tweetcast import afinn111, bucket_by_day, ingest_tweets
from tweetcast.corpus import default_specs, plot_daily_svg, write_daily_csv
from tweetcast.synth import SynthSpec, generate_corpus

lex = afinn111()
specs = default_specs()

lines = generate_corpus(SynthSpec(planted_e=(0.6, 0.4), n_tweets=5000, seed=3), lex).splitlines()
# a repeated record and a Spanish one, both filtered out
lines += [lines[0],
          '{"id": "es-1", "created_at": "2012-10-03T01:00:00Z", "text": "Obama bueno", "lang": "es"}']

corpus = ingest_tweets(lines, specs)
print(corpus.stats)

daily = bucket_by_day(corpus, lex, specs)
buf = io.StringIO()
write_daily_csv(daily, buf)
print(buf.getvalue()[:300])

# tweets naming both candidates count for both by default; both="drop"
# discards them instead
mixed = ['{"id": 1, "created_at": "2012-10-03T01:00:00Z", "text": "Obama and Romney both great"}']
for both in ("full", "drop"):
    rows = bucket_by_day(ingest_tweets(mixed, specs, allow_empty=True), lex, specs, both=both)
    print(both, [(r.candidate_id, r.positive) for r in rows])

out = os.path.join(tempfile.gettempdir(), "daily.svg")
plot_daily_svg(daily, out, labels={1: "Obama", 2: "Romney"})
print("wrote", out)
