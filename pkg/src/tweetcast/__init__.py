"""Census-corrected twitter sentiment models for US presidential forecasts."""

__version__ = "0.1.0"
FIXTURE_VERSION = "2012.1"

from .lexicon import Lexicon, SentimentScore, afinn111, load_lexicon, score_text, tokenize  # noqa: E402
from .corpus import (CandidateSpec, Corpus, DailySentiment, Tweet, bucket_by_day,  # noqa: E402
                     ingest_tweets, match_candidates)
from .census import StateProfile, StateTable, load_state_profiles, validate_profiles  # noqa: E402
from .model import (Forecast, StateForecast, TwitterSupport, baseline_forecast,  # noqa: E402
                    electoral_college, estimate_twitter_support, forecast, state_support,
                    two_party_share)
from .evaluation import EvaluationReport, absolute_errors, compare, mae  # noqa: E402
from .synth import SynthSpec, generate_corpus, reference_pipeline  # noqa: E402
