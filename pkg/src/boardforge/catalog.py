"""The annotated game collection: typed entries, queries, and the viability
checklist used to admit games into the collection.

The bundled data file is the authority for names, ids, ratings, and topic
tags; game ids of the seven playable games are linked in REGISTRY_NAMES.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .errors import DataError

BGG_URL_TEMPLATE = "https://boardgamegeek.com/boardgame/{bgg_id}"

# Catalogue display name -> playable game id.
REGISTRY_NAMES = {
    "Pig": "pig",
    "Mastermind": "mastermind",
    "Kalah": "kalah",
    "No Thanks!": "nothanks",
    "Othello": "othello",
    "Black Box": "blackbox",
    "Push Fight": "pushfight",
}


class Topic(Enum):
    BASICS = "Basics"
    ARRAYS = "Arrays"
    ARRAYS_2D = "2D Arrays"
    ALGORITHMS = "Algorithms"
    ALGORITHMS_PLUS = "Algorithms+"
    GRAPHS = "Graphs"

    @property
    def comment(self) -> str:
        return _TOPIC_COMMENTS[self]


_TOPIC_COMMENTS = {
    Topic.BASICS: "Assignments, simple branches and loops.",
    Topic.ARRAYS: "One-dimensional arrays and lists.",
    Topic.ARRAYS_2D: "Two-dimensional arrays",
    Topic.ALGORITHMS: "Basic algorithms (searching, sorting, etc.)",
    Topic.ALGORITHMS_PLUS: "More advanced algorithms like matrix transposition and/or tricky techniques.",
    Topic.GRAPHS: "Graph representations and algorithms",
}


@dataclass(frozen=True)
class Players:
    min: int
    max: int | None  # None = unbounded ("2+")

    @classmethod
    def parse(cls, text: str) -> "Players":
        text = text.strip()
        if text.endswith("+"):
            return cls(min=int(text[:-1]), max=None)
        if "-" in text:
            lo, hi = text.split("-", 1)
            return cls(min=int(lo), max=int(hi))
        n = int(text)
        return cls(min=n, max=n)

    def matches(self, count: int) -> bool:
        return count >= self.min and (self.max is None or count <= self.max)

    def __str__(self) -> str:
        if self.max is None:
            return f"{self.min}+"
        if self.max == self.min:
            return str(self.min)
        return f"{self.min}-{self.max}"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    bgg_id: int
    bgg_rating: float
    core_loc: int
    gui_value: str  # "Low" | "High"
    players: Players
    category: str
    topics: frozenset[Topic]
    implemented: bool

    @property
    def bgg_url(self) -> str:
        return BGG_URL_TEMPLATE.format(bgg_id=self.bgg_id)

    @property
    def game_id(self) -> str | None:
        return REGISTRY_NAMES.get(self.name) if self.implemented else None


VERDICT_PASS = "Pass"
VERDICT_WARN = "Warn"
VERDICT_MANUAL = "Manual"

# The eight admission rules; automated ones carry a check, the others are
# human judgments and always report Manual.
CRITERIA = {
    1: "Quick to play (ideally within 15 minutes) with short, clear rules that are easy to code.",
    2: "Designed for two or more players; solo-capable entries get a warning, not a failure.",
    3: "All players can see the same information, so one shared computer works.",
    4: "Covered by the BGG database with a dedicated page (id present).",
    5: "Not a fixed-problem solo puzzle; randomness must make sessions differ.",
    6: "No long tedious coding chores such as big data entry or custom board art.",
    7: "No language-dependent elements that block international reuse.",
    8: "At least mildly engaging: community rating of 5.0/10 or higher.",
}
_MANUAL_CRITERIA = (1, 3, 5, 6, 7)


@dataclass(frozen=True)
class CriterionVerdict:
    number: int
    verdict: str
    text: str
    note: str = ""


@dataclass(frozen=True)
class CriteriaReport:
    entry: str
    verdicts: tuple[CriterionVerdict, ...]

    def verdict(self, number: int) -> str:
        return self.verdicts[number - 1].verdict


def _parse_entry(doc: dict, index: int) -> CatalogEntry:
    try:
        topics = frozenset(Topic(t) for t in doc["topics"])
        entry = CatalogEntry(
            name=doc["name"],
            bgg_id=int(doc["bgg_id"]),
            bgg_rating=float(doc["bgg_rating"]),
            core_loc=int(doc["core_loc"]),
            gui_value=doc["gui_value"],
            players=Players.parse(doc["players"]),
            category=doc["category"],
            topics=topics,
            implemented=bool(doc["implemented"]),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise DataError(f"catalogue row {index}: {exc}") from exc
    if not 1.0 <= entry.bgg_rating <= 10.0:
        raise DataError(f"catalogue row {index}: rating {entry.bgg_rating} out of range")
    if entry.core_loc <= 0 or entry.players.min < 1:
        raise DataError(f"catalogue row {index}: bad loc/players")
    if entry.gui_value not in ("Low", "High"):
        raise DataError(f"catalogue row {index}: gui_value must be Low or High")
    if not entry.topics:
        raise DataError(f"catalogue row {index}: topics must be nonempty")
    return entry


def load_catalog() -> list[CatalogEntry]:
    """All collection entries in table order."""
    text = resources.files("boardforge.data").joinpath("catalog.json").read_text("utf-8")
    try:
        docs = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"catalogue file is not valid JSON: {exc}") from exc
    if not isinstance(docs, list):
        raise DataError("catalogue file must hold a JSON array")
    entries = [_parse_entry(doc, i) for i, doc in enumerate(docs)]
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        raise DataError("entry names must be unique")
    return entries


def filter_entries(
    entries: list[CatalogEntry],
    topic: Topic | str | None = None,
    category: str | None = None,
    max_loc: int | None = None,
    player_count: int | None = None,
    min_rating: float | None = None,
    gui_value: str | None = None,
    implemented: bool | None = None,
) -> list[CatalogEntry]:
    """Conjunction of the given predicates, preserving catalogue order."""
    if isinstance(topic, str):
        topic = Topic(topic)
    out = []
    for e in entries:
        if topic is not None and topic not in e.topics:
            continue
        if category is not None and e.category.lower() != category.lower():
            continue
        if max_loc is not None and e.core_loc > max_loc:
            continue
        if player_count is not None and not e.players.matches(player_count):
            continue
        if min_rating is not None and e.bgg_rating < min_rating:
            continue
        if gui_value is not None and e.gui_value.lower() != gui_value.lower():
            continue
        if implemented is not None and e.implemented != implemented:
            continue
        out.append(e)
    return out


def validate(entry: CatalogEntry) -> CriteriaReport:
    """Apply the admission checklist: automated where possible, else Manual."""
    verdicts = []
    for number in range(1, 9):
        text = CRITERIA[number]
        if number in _MANUAL_CRITERIA:
            verdicts.append(CriterionVerdict(number, VERDICT_MANUAL, text))
        elif number == 2:
            if entry.players.min >= 2:
                verdicts.append(CriterionVerdict(number, VERDICT_PASS, text))
            else:
                verdicts.append(
                    CriterionVerdict(
                        number, VERDICT_WARN, text, note="solo-capable entry"
                    )
                )
        elif number == 4:
            verdict = VERDICT_PASS if entry.bgg_id > 0 else VERDICT_WARN
            verdicts.append(CriterionVerdict(number, verdict, text))
        else:  # criterion 8
            verdict = VERDICT_PASS if entry.bgg_rating >= 5.0 else VERDICT_WARN
            verdicts.append(CriterionVerdict(number, verdict, text))
    return CriteriaReport(entry=entry.name, verdicts=tuple(verdicts))
