import io
import json
import logging
import re
from os import PathLike
from typing import IO, Any, Literal

import pandas as pd

from ..errors import CorpusParseError, InputError
from .corpus import Corpus, RejectedRecord
from .paper_record import PaperRecord

logger = logging.getLogger(__name__)

CorpusFormat = Literal["long-csv", "json-lines", "jsonl"]

LONG_CSV_COLUMNS = ["paper_id", "author_id"]

_PANDAS_LINE = re.compile(r"line (\d+)")


def _normalise_format(format: str) -> Literal["long-csv", "json-lines"]:
    if format == "long-csv":
        return "long-csv"
    if format in ("json-lines", "jsonl"):
        return "json-lines"
    raise InputError(f"Unknown corpus format {format!r}; expected long-csv or jsonl.")


def parse_corpus(source: IO[bytes], format: CorpusFormat) -> Corpus:
    """
    Parse a byte stream of bibliographic records into a Corpus.

    Parameters:
    - source: UTF-8 encoded byte stream.
    - format: "long-csv" (header paper_id,author_id, one row per authorship) or "json-lines"/"jsonl"
      (one object per line with paper_id, authors and optional year and title).

    Repeated authors within a byline are kept once. Papers left without authors are rejected and
    listed in Corpus.rejected instead of failing the whole parse.
    """
    if _normalise_format(format) == "long-csv":
        return _parse_long_csv(source)
    return _parse_json_lines(source)


def _reject(rejected: list[RejectedRecord], line_number: int | None, paper_id: str, reason: str):
    logger.warning("Rejected paper %s (line %s): %s", paper_id, line_number, reason)
    rejected.append(RejectedRecord(line_number=line_number, paper_id=paper_id, reason=reason))


def _parse_long_csv(source: IO[bytes]) -> Corpus:
    try:
        frame = pd.read_csv(
            source,
            dtype=str,
            keep_default_na=False,
            encoding="utf-8",
            skip_blank_lines=True,
        )
    except pd.errors.EmptyDataError:
        raise CorpusParseError(1, "empty input, expected header paper_id,author_id")
    except pd.errors.ParserError as error:
        match = _PANDAS_LINE.search(str(error))
        line_number = int(match.group(1)) if match else None
        raise CorpusParseError(line_number, f"malformed row ({error})") from error
    except UnicodeDecodeError as error:
        raise CorpusParseError(None, f"input is not valid UTF-8 ({error})") from error

    if [column.strip() for column in frame.columns] != LONG_CSV_COLUMNS:
        raise CorpusParseError(1, f"expected header paper_id,author_id, got {','.join(frame.columns)}")

    short_rows = frame.index[frame["author_id"].isna()]
    if len(short_rows):
        raise CorpusParseError(int(short_rows[0]) + 2, "missing author_id field")

    frame = frame.fillna("")
    bylines: dict[str, list[str]] = {}
    first_line: dict[str, int] = {}

    for position, (paper_id, author_id) in enumerate(
        zip(frame["paper_id"], frame["author_id"])
    ):
        line_number = position + 2
        paper_id = paper_id.strip()
        author_id = author_id.strip()
        if not paper_id:
            raise CorpusParseError(line_number, "missing paper_id")

        byline = bylines.setdefault(paper_id, [])
        first_line.setdefault(paper_id, line_number)
        if author_id:
            byline.append(author_id)

    papers: list[PaperRecord] = []
    rejected: list[RejectedRecord] = []
    for paper_id, byline in bylines.items():
        if not byline:
            _reject(rejected, first_line[paper_id], paper_id, "no authors")
            continue
        # Long-csv has no byline position, so authors are ordered by id.
        papers.append(PaperRecord(paper_id, tuple(sorted(set(byline)))))

    return Corpus(papers, rejected)


def _parse_json_lines(source: IO[bytes]) -> Corpus:
    papers: list[PaperRecord] = []
    rejected: list[RejectedRecord] = []
    seen: dict[str, int] = {}

    text = io.TextIOWrapper(source, encoding="utf-8")
    try:
        for line_number, line in enumerate(text, start=1):
            if not line.strip():
                continue
            record = _decode_record(line, line_number)

            paper_id = record["paper_id"]
            if paper_id in seen:
                raise CorpusParseError(
                    line_number, f"paper_id {paper_id} already defined on line {seen[paper_id]}"
                )
            seen[paper_id] = line_number

            authors = [author.strip() for author in record["authors"] if author.strip()]
            if not authors:
                _reject(rejected, line_number, paper_id, "no authors")
                continue
            papers.append(
                PaperRecord.from_byline(paper_id, authors, record.get("year"), record.get("title"))
            )
    except UnicodeDecodeError as error:
        raise CorpusParseError(None, f"input is not valid UTF-8 ({error})") from error
    finally:
        text.detach()

    return Corpus(papers, rejected)


def _decode_record(line: str, line_number: int) -> dict[str, Any]:
    try:
        record = json.loads(line)
    except json.JSONDecodeError as error:
        raise CorpusParseError(line_number, f"invalid JSON ({error.msg})") from error

    if not isinstance(record, dict):
        raise CorpusParseError(line_number, "expected a JSON object")

    paper_id = record.get("paper_id")
    if isinstance(paper_id, int) and not isinstance(paper_id, bool):
        paper_id = str(paper_id)
    if not isinstance(paper_id, str) or not paper_id.strip():
        raise CorpusParseError(line_number, "missing or invalid paper_id")
    record["paper_id"] = paper_id.strip()

    authors = record.get("authors")
    if not isinstance(authors, list) or not all(isinstance(a, str) for a in authors):
        raise CorpusParseError(line_number, "authors must be an array of strings")

    year = record.get("year")
    if year is not None and (not isinstance(year, int) or isinstance(year, bool)):
        raise CorpusParseError(line_number, f"year must be an integer, got {year!r}")
    title = record.get("title")
    if title is not None and not isinstance(title, str):
        raise CorpusParseError(line_number, "title must be a string")

    return record


def write_corpus(corpus: Corpus, sink: IO[bytes], format: CorpusFormat):
    """Serialize a corpus so that parse_corpus reads it back unchanged."""
    if _normalise_format(format) == "long-csv":
        rows = [
            (paper.paper_id, author_id) for paper in corpus for author_id in paper.author_ids
        ]
        frame = pd.DataFrame(rows, columns=LONG_CSV_COLUMNS)
        sink.write(frame.to_csv(index=False, lineterminator="\n").encode("utf-8"))
        return

    for paper in corpus:
        line = json.dumps(paper.to_dict(), ensure_ascii=False)
        sink.write(line.encode("utf-8") + b"\n")


def read_corpus(path: str | PathLike, format: CorpusFormat) -> Corpus:
    with open(path, "rb") as file:
        return parse_corpus(file, format)


def save_corpus(corpus: Corpus, path: str | PathLike, format: CorpusFormat):
    with open(path, "wb") as file:
        write_corpus(corpus, file, format)
