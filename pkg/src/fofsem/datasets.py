"""SNAP dataset registry, convenience downloader, and local file lookup.

The sixteen real networks used by the real-graph Jaccard study, with
their published node/edge counts for loader verification. Downloading is
optional: every analysis also accepts a local edge-list path, and the
test suite skips dataset-dependent checks when files are absent.
"""
from __future__ import annotations

import gzip
import shutil
import tarfile
from dataclasses import dataclass
from pathlib import Path

from .graph import Graph, load_edge_list

_BASE = "https://snap.stanford.edu/data"


@dataclass(frozen=True)
class DatasetInfo:
    name: str
    url: str
    filename: str  # local (possibly gzipped) edge-list filename
    nodes: int
    edges: int
    mean_jaccard: float  # published strictly-2 vs 2-and-1 statistics
    max_jaccard: float
    large: bool = False
    archive_member: str | None = None  # for tar archives: member to extract


DATASETS: dict[str, DatasetInfo] = {
    d.name: d
    for d in [
        DatasetInfo("as-733", f"{_BASE}/as-733.tar.gz", "as20000102.txt",
                    6474, 13895, 0.024, 0.667, archive_member="as20000102.txt"),
        DatasetInfo("ca-AstroPh", f"{_BASE}/ca-AstroPh.txt.gz", "ca-AstroPh.txt.gz",
                    18772, 198110, 0.013, 1.0),
        DatasetInfo("ca-CondMat", f"{_BASE}/ca-CondMat.txt.gz", "ca-CondMat.txt.gz",
                    23133, 93497, 0.033, 1.0),
        DatasetInfo("ca-GrQc", f"{_BASE}/ca-GrQc.txt.gz", "ca-GrQc.txt.gz",
                    5242, 14496, 0.046, 1.0),
        DatasetInfo("ca-HepPh", f"{_BASE}/ca-HepPh.txt.gz", "ca-HepPh.txt.gz",
                    12008, 118521, 0.018, 1.0),
        DatasetInfo("ca-HepTh", f"{_BASE}/ca-HepTh.txt.gz", "ca-HepTh.txt.gz",
                    9877, 25998, 0.024, 1.0),
        DatasetInfo("com-Amazon", f"{_BASE}/bigdata/communities/com-amazon.ungraph.txt.gz",
                    "com-amazon.ungraph.txt.gz", 334863, 925872, 0.103, 0.962),
        DatasetInfo("com-DBLP", f"{_BASE}/bigdata/communities/com-dblp.ungraph.txt.gz",
                    "com-dblp.ungraph.txt.gz", 317080, 1049866, 0.096, 0.933),
        DatasetInfo("email-Enron", f"{_BASE}/email-Enron.txt.gz", "email-Enron.txt.gz",
                    36692, 183831, 0.068, 1.0),
        DatasetInfo("ego-Facebook", f"{_BASE}/facebook_combined.txt.gz",
                    "facebook_combined.txt.gz", 4039, 88234, 0.063, 0.929),
        DatasetInfo("loc-Gowalla", f"{_BASE}/loc-gowalla_edges.txt.gz",
                    "loc-gowalla_edges.txt.gz", 196591, 950327, 0.040, 0.875),
        DatasetInfo("Oregon-1", f"{_BASE}/oregon1_010526.txt.gz", "oregon1_010526.txt.gz",
                    11174, 23409, 0.001, 0.4),
        DatasetInfo("Oregon-2", f"{_BASE}/oregon2_010526.txt.gz", "oregon2_010526.txt.gz",
                    11461, 32730, 0.001, 0.524),
        DatasetInfo("roadNet-CA", f"{_BASE}/roadNet-CA.txt.gz", "roadNet-CA.txt.gz",
                    1965206, 2766607, 0.047, 1.0, large=True),
        DatasetInfo("roadNet-PA", f"{_BASE}/roadNet-PA.txt.gz", "roadNet-PA.txt.gz",
                    1088092, 1541898, 0.047, 1.0, large=True),
        DatasetInfo("roadNet-TX", f"{_BASE}/roadNet-TX.txt.gz", "roadNet-TX.txt.gz",
                    1379917, 1921660, 0.047, 1.0, large=True),
    ]
}


class UnknownDatasetError(ValueError):
    def __init__(self, name: str):
        valid = ", ".join(sorted(DATASETS))
        super().__init__(f"unknown dataset {name!r}; valid names: {valid}")


class DownloadError(RuntimeError):
    """Network-level failure; safe to retry."""


class CorruptDownloadError(RuntimeError):
    """Downloaded file failed to parse as an edge list."""


def dataset_path(name: str, directory: str | Path) -> Path:
    if name not in DATASETS:
        raise UnknownDatasetError(name)
    return Path(directory) / DATASETS[name].filename


def load_dataset(name: str, directory: str | Path) -> Graph:
    return load_edge_list(dataset_path(name, directory))


def fetch_dataset(name: str, destination: str | Path) -> Path:
    """Download one SNAP dataset into ``destination`` and verify it parses.

    Idempotent: an existing file is kept. Tar archives (as-733) have
    their single needed member extracted.
    """
    if name not in DATASETS:
        raise UnknownDatasetError(name)
    info = DATASETS[name]
    dest = Path(destination)
    dest.mkdir(parents=True, exist_ok=True)
    target = dest / info.filename
    if target.exists():
        return target
    import requests

    tmp = target.with_suffix(target.suffix + ".part")
    try:
        with requests.get(info.url, stream=True, timeout=60) as resp:
            resp.raise_for_status()
            with tmp.open("wb") as out:
                shutil.copyfileobj(resp.raw, out)
    except requests.RequestException as err:
        tmp.unlink(missing_ok=True)
        raise DownloadError(f"download of {name} from {info.url} failed: {err}") from err
    try:
        if info.archive_member is not None:
            with tarfile.open(tmp, "r:gz") as tar, \
                    tar.extractfile(info.archive_member) as member:
                data = member.read()
            if info.filename.endswith(".gz"):
                data = gzip.compress(data)
            target.write_bytes(data)
            tmp.unlink()
        else:
            tmp.rename(target)
        graph = load_edge_list(target)
        if graph.vertex_count == 0:
            raise ValueError("parsed to an empty graph")
    except Exception as err:
        target.unlink(missing_ok=True)
        tmp.unlink(missing_ok=True)
        raise CorruptDownloadError(f"downloaded {name} failed verification: {err}") from err
    return target
