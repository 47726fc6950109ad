"""Walk through the rule engine on a handful of tweets.

Run from the repository root:

    python3 demos/01_scoring_walkthrough.py
"""

from tensilex import explain, load_lexicon_set, score_text

lex = load_lexicon_set("data/default_lexicon")

TWEETS = [
    "Almost home and the train is delayed",
    "Fell asleep on the beach, totally relaxed :)",
    "never relaxed before a deadline",
    "sooo stressssed about the exam!!!",
    "put my feet up with a massage",
]

print("Each text gets a stress score (-1 none .. -5 extreme) and a")
print("relaxation score (1 none .. 5 complete), from the strongest")
print("matching term per sentence after the modifier rules.\n")

for text in TWEETS:
    score, _ = score_text(text, lex)
    print(f"stress {score.stress:>3}  relaxation {score.relaxation}  | {text}")

print("\nThe trace explains every rule that fired:\n")
print(explain("never relaxed before a deadline!!!", lex))
