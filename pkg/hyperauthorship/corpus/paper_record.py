from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass(frozen=True)
class PaperRecord:
    """One publication and its deduplicated byline. Authors are opaque identifiers."""

    paper_id: str
    author_ids: tuple[str, ...]
    year: int | None = field(default=None, compare=True)
    title: str | None = field(default=None, compare=True)

    def __post_init__(self):
        if not self.paper_id:
            raise ValueError("A paper needs a non-empty paper_id.")
        if not self.author_ids:
            raise ValueError(f"Paper {self.paper_id} has no authors.")
        if len(set(self.author_ids)) != len(self.author_ids):
            raise ValueError(f"Paper {self.paper_id} lists an author twice.")

    @classmethod
    def from_byline(
        cls,
        paper_id: str,
        author_ids: Iterable[str],
        year: int | None = None,
        title: str | None = None,
    ) -> "PaperRecord":
        """Build a record from a raw byline, keeping the first occurrence of repeated authors."""
        return cls(paper_id, tuple(dict.fromkeys(author_ids)), year, title)

    @property
    def n_authors(self) -> int:
        return len(self.author_ids)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"paper_id": self.paper_id, "authors": list(self.author_ids)}
        if self.year is not None:
            data["year"] = self.year
        if self.title is not None:
            data["title"] = self.title
        return data
