import pytest
from hypothesis import given, strategies as st

from tweetcast.lexicon import (Lexicon, LexiconError, SentimentScore, load_lexicon, score_text,
                               score_texts, tokenize)


class TestLoad:
    def test_single_line(self):
        lex = load_lexicon("good\t3\n")
        assert len(lex) == 1
        assert lex["good"] == 3

    def test_empty_input(self):
        lex = load_lexicon("")
        assert len(lex) == 0
        assert score_text(lex, "good things") == SentimentScore(0, 0, 0)

    def test_duplicate_term(self):
        with pytest.raises(LexiconError, match="duplicate"):
            load_lexicon("abandon\t-2\nabandon\t-2\n")

    def test_duplicate_after_lowercasing(self):
        with pytest.raises(LexiconError, match="line 2"):
            load_lexicon("Good\t3\ngood\t3\n")

    @pytest.mark.parametrize("text, lineno", [
        ("good\t3\nbad -3\n", 2),
        ("good\tthree\n", 1),
        ("good\t3\n\nawful\t-6\n", 3),
        ("good\t3\t1\n", 1),
        ("\t3\n", 1),
    ])
    def test_malformed_line_names_line(self, text, lineno):
        with pytest.raises(LexiconError) as info:
            load_lexicon(text)
        assert info.value.lineno == lineno
        assert f"line {lineno}" in str(info.value)

    def test_trailing_blank_lines_ignored(self):
        assert len(load_lexicon("good\t3\nbad\t-3\n\n\n")) == 2

    def test_path_and_lines(self, tmp_path):
        p = tmp_path / "lex.txt"
        p.write_text("happy\t3\nsad\t-2\n", encoding="utf-8")
        assert dict(load_lexicon(p).entries) == {"happy": 3, "sad": -2}
        assert dict(load_lexicon(["happy\t3\n"]).entries) == {"happy": 3}

    def test_mapping_constructor_validates(self):
        with pytest.raises(LexiconError):
            Lexicon({"x": 9})
        with pytest.raises(LexiconError):
            Lexicon([("x", 1), ("X", 2)])

    def test_tokenization_collision_rejected(self):
        with pytest.raises(LexiconError, match="identical after tokenization"):
            load_lexicon("cover-up\t-3\ncover up\t-2\n")


class TestAfinn:
    def test_size_and_known_valences(self, lexicon):
        # values read straight from the AFINN-111 file
        assert len(lexicon) == 2477
        assert lexicon["good"] == 3
        assert lexicon["can't stand"] == -3
        assert lexicon["does not work"] == -3
        assert lexicon["outstanding"] == 5

    def test_phrases(self, lexicon):
        # 15 entries contain spaces, 8 more are hyphenated and split into tokens
        assert lexicon.phrase_count == 23

    def test_case_insensitive_lookup(self, lexicon):
        assert lexicon["GOOD"] == 3
        assert "Good" in lexicon


class TestTokenize:
    @pytest.mark.parametrize("text, tokens", [
        ("", []),
        ("Good, GOOD!", ["good", "good"]),
        ("can't stop", ["can't", "stop"]),
        ("snake_case #hash @user 2012", ["snake", "case", "hash", "user", "2012"]),
        ("it’s naïve", ["it's", "naïve"]),
        ("Obamacare", ["obamacare"]),
    ])
    def test_examples(self, text, tokens):
        assert tokenize(text) == tokens


class TestScore:
    def test_empty(self, lexicon):
        s = score_text(lexicon, "")
        assert (s.positive, s.negative, s.net, s.matched_tokens) == (0, 0, 0, 0)

    def test_additive_repeat(self, lexicon):
        s = score_text(lexicon, "good good")
        assert s.positive == 2 * lexicon["good"] == 6
        assert s.negative == 0
        assert s.matched_tokens == 2

    def test_unknown_tokens(self, lexicon):
        assert score_text(lexicon, "zxqv unknown-token") == SentimentScore(0, 0, 0)

    def test_mixed(self, lexicon):
        s = score_text(lexicon, "great plan, terrible delivery")
        assert (s.positive, s.negative, s.net) == (3, 3, 0)

    def test_phrase_mode_prefers_longest_match(self, lexicon):
        text = "this does not work and I can't stand it, no fun"
        uni = score_text(lexicon, text)
        phr = score_text(lexicon, text, phrases=True)
        # unigram hits: no (-1), fun (+4)
        assert (uni.positive, uni.negative) == (4, 1)
        # phrases: does not work -3, can't stand -3, no fun -3
        assert (phr.positive, phr.negative) == (0, 9)
        assert phr.matched_tokens == 7

    def test_hyphenated_entries_only_in_phrase_mode(self, lexicon):
        assert score_text(lexicon, "a cover-up").net == 0
        assert score_text(lexicon, "a cover-up", phrases=True).net == -3

    def test_score_texts_matches_serial(self, lexicon):
        texts = ["good", "bad bad", "", "can't stand it"] * 50
        serial = [score_text(lexicon, t, True) for t in texts]
        assert score_texts(lexicon, texts, True) == serial
        assert score_texts(lexicon, texts, True, workers=2, chunksize=64) == serial


words = st.sampled_from(["good", "bad", "love", "hate", "obama", "the", "can't", "stand",
                         "no", "fun", "win", "xyz", "Great", "TERRIBLE"])
texts = st.one_of(
    st.text(alphabet=st.characters(min_codepoint=32, max_codepoint=126), max_size=80),
    st.lists(words, max_size=20).map(" ".join),
)


@given(texts, texts)
def test_additivity(lexicon, a, b):
    assert score_text(lexicon, a + " " + b).net == (score_text(lexicon, a).net
                                                    + score_text(lexicon, b).net)


@given(texts)
def test_case_invariance(lexicon, t):
    assert score_text(lexicon, t.upper()) == score_text(lexicon, t)
    assert score_text(lexicon, t.upper(), True) == score_text(lexicon, t, True)


@given(texts)
def test_bounds(lexicon, t):
    for phrases in (False, True):
        s = score_text(lexicon, t, phrases)
        assert abs(s.net) <= 5 * len(tokenize(t))
        assert s.positive >= 0 and s.negative >= 0
        assert s.matched_tokens <= len(tokenize(t))


@given(st.text(max_size=200))
def test_tokenize_idempotent(t):
    toks = tokenize(t)
    assert tokenize(" ".join(toks)) == toks
