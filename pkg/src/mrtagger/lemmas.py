"""Small verb lemmatizer: irregular-form table plus suffix stripping.

Lookups degrade to the lowercased surface when nothing matches, so callers
that key decisions on lemmas (diagnostics, type counts) fall back to
"unknown", never to a wrong entry.
"""

from __future__ import annotations

# Inflected form -> base form. Covers common English irregular verbs
# (past, participle and irregular 3rd-singular forms).
IRREGULAR_FORMS = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be",
    "arose": "arise", "arisen": "arise",
    "ate": "eat", "eaten": "eat",
    "awoke": "awake", "awoken": "awake",
    "beat": "beat", "beaten": "beat",
    "became": "become",
    "began": "begin", "begun": "begin",
    "bent": "bend",
    "bet": "bet",
    "bit": "bite", "bitten": "bite",
    "bled": "bleed",
    "blew": "blow", "blown": "blow",
    "broke": "break", "broken": "break",
    "brought": "bring",
    "built": "build",
    "burnt": "burn",
    "burst": "burst",
    "bought": "buy",
    "caught": "catch",
    "chose": "choose", "chosen": "choose",
    "came": "come",
    "cost": "cost",
    "crept": "creep",
    "cut": "cut",
    "dealt": "deal",
    "did": "do", "done": "do", "does": "do",
    "drank": "drink", "drunk": "drink",
    "drew": "draw", "drawn": "draw",
    "dreamt": "dream",
    "drove": "drive", "driven": "drive",
    "dug": "dig",
    "fed": "feed",
    "fell": "fall", "fallen": "fall",
    "felt": "feel",
    "fought": "fight",
    "flew": "fly", "flown": "fly",
    "forgot": "forget", "forgotten": "forget",
    "forgave": "forgive", "forgiven": "forgive",
    "froze": "freeze", "frozen": "freeze",
    "found": "find",
    "gave": "give", "given": "give",
    "got": "get", "gotten": "get",
    "went": "go", "gone": "go", "goes": "go",
    "grew": "grow", "grown": "grow",
    "had": "have", "has": "have",
    "heard": "hear",
    "held": "hold",
    "hid": "hide", "hidden": "hide",
    "hit": "hit",
    "hurt": "hurt",
    "kept": "keep",
    "knelt": "kneel",
    "knew": "know", "known": "know",
    "laid": "lay",
    "led": "lead",
    "leapt": "leap",
    "learnt": "learn",
    "left": "leave",
    "lent": "lend",
    "lay": "lie", "lain": "lie",
    "lit": "light",
    "lost": "lose",
    "made": "make",
    "meant": "mean",
    "met": "meet",
    "paid": "pay",
    "put": "put",
    "quit": "quit",
    "read": "read",
    "rode": "ride", "ridden": "ride",
    "rang": "ring", "rung": "ring",
    "rose": "rise", "risen": "rise",
    "ran": "run",
    "said": "say", "says": "say",
    "saw": "see", "seen": "see",
    "sold": "sell",
    "sent": "send",
    "set": "set",
    "sewed": "sew", "sewn": "sew",
    "shook": "shake", "shaken": "shake",
    "shone": "shine",
    "shot": "shoot",
    "showed": "show", "shown": "show",
    "shrank": "shrink", "shrunk": "shrink",
    "shut": "shut",
    "sang": "sing", "sung": "sing",
    "sank": "sink", "sunk": "sink",
    "sat": "sit",
    "slept": "sleep",
    "slid": "slide",
    "spoke": "speak", "spoken": "speak",
    "sped": "speed",
    "spent": "spend",
    "spilt": "spill",
    "spun": "spin",
    "spat": "spit",
    "split": "split",
    "spread": "spread",
    "sprang": "spring", "sprung": "spring",
    "stood": "stand",
    "stole": "steal", "stolen": "steal",
    "stuck": "stick",
    "stung": "sting",
    "struck": "strike",
    "swore": "swear", "sworn": "swear",
    "swept": "sweep",
    "swam": "swim", "swum": "swim",
    "swung": "swing",
    "took": "take", "taken": "take",
    "taught": "teach",
    "tore": "tear", "torn": "tear",
    "told": "tell",
    "thought": "think",
    "threw": "throw", "thrown": "throw",
    "understood": "understand",
    "woke": "wake", "woken": "wake",
    "wore": "wear", "worn": "wear",
    "wove": "weave", "woven": "weave",
    "wept": "weep",
    "won": "win",
    "wound": "wind",
    "wrote": "write", "written": "write",
}

_VOWELS = set("aeiou")


def _is_cvc(stem: str) -> bool:
    if len(stem) < 3:
        return False
    a, b, c = stem[-3], stem[-2], stem[-1]
    return a not in _VOWELS and b in _VOWELS and c not in _VOWELS and c not in "wxy"


def lemma_candidates(surface: str) -> list[str]:
    """Ordered candidate base forms for an inflected surface.

    The first entry is always the lowercased surface itself (covers base
    forms); suffix-stripped candidates follow, most conservative first.
    """
    w = surface.lower()
    candidates = [w]
    if w in IRREGULAR_FORMS:
        candidates.append(IRREGULAR_FORMS[w])

    def push(c):
        if len(c) >= 2 and c not in candidates:
            candidates.append(c)

    if w.endswith("ies") and len(w) > 4:
        push(w[:-3] + "y")
    if w.endswith("es") and len(w) > 3:
        push(w[:-2])
    if w.endswith("s") and not w.endswith("ss") and len(w) > 2:
        push(w[:-1])
    if w.endswith("ied") and len(w) > 4:
        push(w[:-3] + "y")
    if w.endswith("ed") and len(w) > 3:
        push(w[:-1])                   # wiped -> wipe
        stem = w[:-2]
        push(stem)                     # melted -> melt
        push(stem + "e")
        if len(stem) > 2 and stem[-1] == stem[-2]:
            push(stem[:-1])            # hopped -> hop
    if w.endswith("ing") and len(w) > 4:
        stem = w[:-3]
        push(stem)                     # spilling -> spill
        push(stem + "e")               # making -> make
        if len(stem) > 2 and stem[-1] == stem[-2]:
            push(stem[:-1])            # running -> run
    return candidates


def lemmatize(surface: str, known: "set[str] | frozenset[str] | None" = None) -> str:
    """Best-guess base form.

    With ``known`` given, the first candidate found in it wins; otherwise the
    irregular table is consulted and the first plausible stripped candidate
    (those needing no dictionary, i.e. irregulars) is used.  Falls back to
    the lowercased surface.
    """
    w = surface.lower()
    if w in IRREGULAR_FORMS:
        base = IRREGULAR_FORMS[w]
        if known is None or base in known or w not in (known or ()):
            return base
    if known is not None:
        for cand in lemma_candidates(w):
            if cand in known:
                return cand
        return w
    # No dictionary: only apply strippings that are safe without one.
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("ied") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("s") and not w.endswith("ss") and not w.endswith("us") and len(w) > 3:
        return w[:-2] if w.endswith("es") and w[-3] in "sxzh" else w[:-1]
    return w
