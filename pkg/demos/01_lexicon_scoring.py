"""
Scoring tweets with the AFINN word list
=======================================

Every token found in the lexicon contributes its valence. Positive and
negative valence are kept apart, since the support estimate only uses the
positive side by default.
"""

from tweetcast import afinn111, score_text, tokenize

lex = afinn111()
print(len(lex), "entries,", lex.phrase_count, "of them multi-token")

text = "Obama was GREAT tonight, Romney's answers were a total fail"
print(tokenize(text))

s = score_text(lex, text)
print("positive", s.positive, "negative", s.negative, "net", s.net)
print("matched", s.matched_tokens)

# phrase mode matches the longest entry first, so "does not work" is -3
# once instead of "not" and "work" on their own
for phrases in (False, True):
    print(phrases, score_text(lex, "the plan does not work", phrases=phrases))

# scores add up
total = sum((score_text(lex, t) for t in ["love it", "hate it", "meh"]), start=score_text(lex, ""))
print(total)
