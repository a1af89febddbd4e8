"""Bundled stopword lists and stopword-file loading.

Lists are deliberately small and closed: they are inputs to the pipeline,
not linguistic resources.  A user-supplied file (one term per line, UTF-8)
overrides the bundled defaults.
"""

from __future__ import annotations

from pathlib import Path

_ENGLISH = frozenset(
    "a about above after again against all am an and any are aren as at be "
    "because been before being below between both but by can cannot could "
    "couldn did didn do does doesn doing don down during each few for from "
    "further had hadn has hasn have haven having he her here hers herself "
    "him himself his how i if in into is isn it its itself just me more "
    "most mustn my myself no nor not now of off on once only or other our "
    "ours ourselves out over own re s same shan she should shouldn so some "
    "such t than that the their theirs them themselves then there these "
    "they this those through to too under until up very was wasn we were "
    "weren what when where which while who whom why will with won would "
    "wouldn you your yours yourself yourselves".split()
)

_PORTUGUESE = frozenset(
    "a agora ainda as ao aos aquela aquelas aquele aqueles aquilo até com "
    "como da das de dela delas dele deles depois do dos e ela elas ele eles "
    "em entre era eram essa essas esse esses esta estas este estes estou "
    "está estão eu foi foram fosse há isso isto já lhe lhes mais mas me "
    "mesmo meu meus minha minhas muito na nas nem no nos nossa nossas nosso "
    "nossos num numa não nós o os ou para pela pelas pelo pelos por qual "
    "quando que quem se sem ser seu seus sua suas são só também te tem "
    "temos tenho teu tua tudo um uma você vocês à às é".split()
)

_BUNDLED = {"en": _ENGLISH, "pt": _PORTUGUESE}


def default_stopwords(language: str = "en") -> frozenset[str]:
    """Return the bundled stopword set for a language tag ("en" or "pt")."""
    try:
        return _BUNDLED[language]
    except KeyError:
        raise ValueError(
            f"no bundled stopword list for language {language!r}; "
            f"available: {sorted(_BUNDLED)}"
        ) from None


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stopword file: one term per line, UTF-8, blank lines ignored."""
    terms = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            term = line.strip()
            if term:
                terms.append(term.lower())
    return frozenset(terms)
