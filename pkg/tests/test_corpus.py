import json
from datetime import date, datetime, timezone

import pytest
from hypothesis import given, settings, strategies as st

from tweetcast.corpus import (CandidateSpec, Corpus, DailySentiment, EmptyCorpusError,
                              IngestError, Tweet, bucket_by_day, check_specs, daily_csv,
                              ingest_tweets, match_candidates, parse_timestamp, plot_daily_svg,
                              read_daily_csv)
from tweetcast.lexicon import score_text


def rec(id, text="Obama speaks", ts="2012-09-01T12:00:00Z", lang="en"):
    d = {"id": id, "created_at": ts, "text": text}
    if lang is not None:
        d["lang"] = lang
    return json.dumps(d)


def stats_tuple(c):
    s = c.stats
    return (s.read, s.kept, s.deduped, s.non_english, s.unmatched, s.unparseable)


class TestIngest:
    def test_duplicate_ids(self, specs):
        c = ingest_tweets([rec("1"), rec("1", "Obama again")], specs)
        assert len(c) == 1
        assert c.stats.deduped == 1
        assert c.tweets[0].text == "Obama speaks"

    def test_non_english_dropped(self, specs):
        c = ingest_tweets([rec("1", lang="es"), rec("2")], specs)
        assert c.stats.non_english == 1
        assert [t.id for t in c] == ["2"]

    def test_non_english_kept_when_not_filtering(self, specs):
        c = ingest_tweets([rec("1", lang="es")], specs, english_only=False)
        assert len(c) == 1

    def test_missing_lang_kept(self, specs):
        c = ingest_tweets([rec("1", lang=None)], specs)
        assert len(c) == 1
        assert c.stats.missing_lang == 1

    def test_three_in_order(self, specs):
        lines = [rec(str(i), ts=f"2012-09-0{i}T00:00:00Z") for i in (1, 2, 3)]
        c = ingest_tweets(lines, specs)
        assert stats_tuple(c)[:5] == (3, 3, 0, 0, 0)
        assert [t.id for t in c] == ["1", "2", "3"]

    def test_sorted_by_time_then_id(self, specs):
        lines = [rec("b", ts="2012-09-02T00:00:00Z"), rec("c", ts="2012-09-01T00:00:00Z"),
                 rec("a", ts="2012-09-02T00:00:00Z")]
        assert [t.id for t in ingest_tweets(lines, specs)] == ["c", "a", "b"]

    def test_fixture_stats(self, tweets10, specs):
        c = ingest_tweets(tweets10.splitlines(), specs)
        assert stats_tuple(c) == (10, 7, 0, 1, 2, 0)

    @pytest.mark.parametrize("bad", [
        "not json",
        "[1, 2]",
        json.dumps({"id": "", "created_at": "2012-09-01T00:00:00Z", "text": "Obama"}),
        json.dumps({"id": "9", "created_at": "2012-09-01T00:00:00", "text": "Obama"}),
        json.dumps({"id": "9", "created_at": "yesterday", "text": "Obama"}),
        json.dumps({"id": "9", "created_at": "2012-09-01T00:00:00Z", "text": "   "}),
        json.dumps({"id": "9", "text": "Obama"}),
        json.dumps({"id": "9", "created_at": "2012-09-01T00:00:00Z", "text": "Obama", "lang": 3}),
    ])
    def test_unparseable_lenient_and_strict(self, specs, bad):
        c = ingest_tweets([bad, rec("1")], specs)
        assert c.stats.unparseable == 1 and len(c) == 1
        with pytest.raises(IngestError, match="line 1"):
            ingest_tweets([bad, rec("1")], specs, strict=True)

    def test_numeric_id_accepted(self, specs):
        line = json.dumps({"id": 42, "created_at": "2012-09-01T00:00:00Z", "text": "Obama"})
        assert ingest_tweets([line], specs).tweets[0].id == "42"

    def test_empty_result(self, specs):
        with pytest.raises(EmptyCorpusError, match="empty corpus"):
            ingest_tweets([rec("1", "nothing here")], specs)
        assert len(ingest_tweets([], specs, allow_empty=True)) == 0

    def test_blank_lines_are_not_records(self, specs):
        c = ingest_tweets([rec("1"), "", "   \n"], specs)
        assert c.stats.read == 1


class TestTimestamps:
    def test_offset_normalized_to_utc(self):
        ts = parse_timestamp("2012-10-02T23:30:00-05:00")
        assert ts == datetime(2012, 10, 3, 4, 30, tzinfo=timezone.utc)

    def test_naive_rejected(self):
        with pytest.raises(ValueError):
            parse_timestamp("2012-10-02T23:30:00")


class TestMatch:
    @pytest.mark.parametrize("text, expected", [
        ("Obama wins", {1}),
        ("Obama vs Romney debate", {1, 2}),
        ("Obamacare", set()),
        ("Romney's plan", set()),
        ("#romney", {2}),
    ])
    def test_examples(self, specs, text, expected):
        assert match_candidates(text, specs) == expected

    def test_accepts_tweet(self, specs):
        t = Tweet("1", datetime(2012, 9, 1, tzinfo=timezone.utc), "go romney")
        assert match_candidates(t, specs) == {2}

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            CandidateSpec(1, ())
        with pytest.raises(ValueError):
            CandidateSpec(1, ("Obama",))
        with pytest.raises(ValueError):
            check_specs([CandidateSpec(1, ("obama",)), CandidateSpec(2, ("obama", "mitt"))])


class TestBucket:
    def test_empty(self, lexicon, specs):
        assert bucket_by_day(Corpus(), lexicon, specs) == []

    def test_single(self, lexicon, specs):
        t = Tweet("1", datetime(2012, 9, 1, 5, tzinfo=timezone.utc), "Obama is good")
        assert bucket_by_day([t], lexicon, specs) == [
            DailySentiment(date(2012, 9, 1), 1, 3, 0, 1)]

    # frozen from a one-pass oracle over the fixture using plain re.split and
    # a dict read from the AFINN file (see tests/data/tweets10.jsonl)
    EXPECTED = [
        ("2012-10-03", 1, 9, 4, 2),
        ("2012-10-03", 2, 3, 4, 2),
        ("2012-10-04", 1, 5, 0, 1),
        ("2012-10-04", 2, 7, 0, 1),
        ("2012-10-05", 1, 0, 6, 1),
        ("2012-10-05", 2, 0, 6, 1),
        ("2012-10-06", 1, 8, 1, 1),
    ]

    def test_fixture_rows(self, tweets10, lexicon, specs):
        c = ingest_tweets(tweets10.splitlines(), specs)
        rows = bucket_by_day(c, lexicon, specs)
        got = [(r.date.isoformat(), r.candidate_id, r.positive, r.negative, r.tweet_count)
               for r in rows]
        assert got == self.EXPECTED

    def test_fixture_phrase_mode(self, tweets10, lexicon, specs):
        c = ingest_tweets(tweets10.splitlines(), specs)
        rows = {(r.date.isoformat(), r.candidate_id): (r.positive, r.negative)
                for r in bucket_by_day(c, lexicon, specs, phrases=True)}
        assert rows[("2012-10-03", 2)] == (3, 7)   # "can't stand"
        assert rows[("2012-10-06", 1)] == (4, 3)   # "no fun"

    def test_drop_both(self, tweets10, lexicon, specs):
        c = ingest_tweets(tweets10.splitlines(), specs)
        rows = bucket_by_day(c, lexicon, specs, both="drop")
        assert sum(r.tweet_count for r in rows) == 5
        with pytest.raises(ValueError):
            bucket_by_day(c, lexicon, specs, both="split")

    def test_workers_identical(self, lexicon, specs):
        lines = [rec(str(i), text=("Obama good" if i % 3 else "Romney bad Obama"),
                     ts=f"2012-09-{1 + i % 28:02d}T00:00:00Z") for i in range(300)]
        c = ingest_tweets(lines, specs)
        assert (bucket_by_day(c, lexicon, specs, workers=3, chunksize=40)
                == bucket_by_day(c, lexicon, specs))

    def test_csv_roundtrip(self, tweets10, lexicon, specs, tmp_path):
        rows = bucket_by_day(ingest_tweets(tweets10.splitlines(), specs), lexicon, specs)
        text = daily_csv(rows)
        assert text.splitlines()[0] == "date,candidate,positive,negative,tweet_count"
        assert text.splitlines()[1] == "2012-10-03,1,9,4,2"
        p = tmp_path / "d.csv"
        p.write_text(text)
        with open(p) as fh:
            assert read_daily_csv(fh) == rows

    def test_svg(self, tweets10, lexicon, specs, tmp_path):
        import xml.etree.ElementTree as ET

        rows = bucket_by_day(ingest_tweets(tweets10.splitlines(), specs), lexicon, specs)
        out = tmp_path / "chart.svg"
        plot_daily_svg(rows, out, {1: "Obama", 2: "Romney"})
        root = ET.parse(out).getroot()
        assert root.tag.endswith("svg")


record = st.builds(
    lambda i, day, who, lang, extra: rec(
        str(i), text=f"{who} {extra}", ts=f"2012-09-{day:02d}T10:00:00Z", lang=lang),
    st.integers(0, 30), st.integers(1, 28),
    st.sampled_from(["Obama", "Romney", "Obama Romney", "nobody"]),
    st.sampled_from(["en", "es", None]),
    st.sampled_from(["good", "bad", "can't stand", "love hate", ""]),
)
lines_st = st.lists(st.one_of(record, st.just("{broken")), max_size=40)


@settings(max_examples=60, deadline=None)
@given(lines_st)
def test_conservation_and_sums(lexicon, specs, lines):
    c = ingest_tweets(lines, specs, allow_empty=True)
    s = c.stats
    assert s.read == s.kept + s.deduped + s.non_english + s.unmatched + s.unparseable
    assert len({t.id for t in c}) == len(c)
    keys = [(t.timestamp, t.id) for t in c]
    assert keys == sorted(keys)
    rows = bucket_by_day(c, lexicon, specs)
    for j in (1, 2):
        expected = sum(score_text(lexicon, t.text).positive
                       for t in c if j in match_candidates(t, specs))
        assert sum(r.positive for r in rows if r.candidate_id == j) == expected
    assert c == ingest_tweets(lines, specs, allow_empty=True)
