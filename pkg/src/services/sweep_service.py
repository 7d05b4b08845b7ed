"""Service orchestrating sweeps of the conjecture suite over instance streams."""

import asyncio
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from enum import StrEnum
from typing import Callable, Dict, Iterator, List, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.config import settings
from src.core.error_codes import EnumerationErrorCode
from src.core.exceptions import EnumerationException
from src.core.logger import clear_instance_id, get_logger, set_instance_id
from src.models import Arc, Digraph
from src.services.conjecture_service import (
    ConjectureId,
    ConjectureService,
    CrossCheckReport,
    kl_prune,
)
from src.services.enumeration_service import (
    canonical_key,
    check_cap,
    digraph_at_index,
    digraph_count,
    random_digraph_at_index,
    tournament_at_index,
    tournament_count,
    validate_probabilities,
)
from src.stores.checkpoint_store import Checkpoint, CheckpointStore

logger = get_logger(__name__)

ChunkItem = Tuple[int, int, Tuple[Tuple[int, int], ...]]


class SweepMode(StrEnum):
    ALL = "all"
    TOURNAMENTS = "tournaments"
    RANDOM = "random"


class EnumSpec(BaseModel):
    """Which instances a sweep examines."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Vertex count")
    mode: SweepMode = Field(..., description="all | tournaments | random")
    sample_count: Optional[int] = Field(
        default=None, ge=1, description="Samples in random mode"
    )
    seed: int = Field(default=0, ge=0, description="Seed in random mode")
    dedup: bool = Field(default=False, description="Skip isomorphic repeats")
    prune: bool = Field(default=False, description="Keep only kl_prune survivors")
    allow_oversize: bool = Field(
        default=False, description="Override size caps with a warning"
    )
    p_forward: Optional[str] = Field(
        default=None, description="Random mode P(i -> j); defaults from settings"
    )
    p_backward: Optional[str] = Field(
        default=None, description="Random mode P(j -> i); defaults from settings"
    )

    @model_validator(mode="after")
    def check_random_fields(self) -> "EnumSpec":
        if self.mode == SweepMode.RANDOM and self.sample_count is None:
            raise ValueError("random mode requires sample_count >= 1")
        return self


class InstanceOutcome(BaseModel):
    """Cross-check report of one instance, keyed by its stream index."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    index: int
    report: CrossCheckReport

    @property
    def notable(self) -> bool:
        return bool(self.report.counterexamples or self.report.violations)


class SearchReport(BaseModel):
    """Aggregate of a sweep; every list is sorted by instance index."""

    spec: EnumSpec
    start_index: int = Field(..., description="First index examined by this run")
    generated: int = Field(..., description="Indices drawn from the stream")
    instances: int = Field(..., description="Instances cross-checked")
    duplicates: int = Field(default=0, description="Skipped as isomorphic repeats")
    pruned: int = Field(default=0, description="Skipped by kl_prune")
    counterexamples: Dict[str, List[int]] = Field(
        ..., description="Failing instance indices per conjecture"
    )
    violation_count: int = Field(
        ..., description="Instances with violations, including resumed ones"
    )
    violating_instances: List[int] = Field(default_factory=list)
    wall_time_seconds: float = Field(default=0.0)

    @property
    def clean(self) -> bool:
        return self.violation_count == 0 and not any(self.counterexamples.values())


def instance_count(spec: EnumSpec) -> int:
    if spec.mode == SweepMode.ALL:
        return digraph_count(spec.n)
    if spec.mode == SweepMode.TOURNAMENTS:
        return tournament_count(spec.n)
    assert spec.sample_count is not None
    return spec.sample_count


def instance_at(spec: EnumSpec, index: int) -> Digraph:
    if spec.mode == SweepMode.ALL:
        return digraph_at_index(spec.n, index)
    if spec.mode == SweepMode.TOURNAMENTS:
        return tournament_at_index(spec.n, index)
    return random_digraph_at_index(
        spec.n,
        spec.p_forward or settings.random__p_forward,
        spec.p_backward or settings.random__p_backward,
        spec.seed,
        index,
    )


def check_spec(spec: EnumSpec) -> None:
    """
    Raises:
        EnumerationException: SIZE_CAP_EXCEEDED or INVALID_PROBABILITY
    """
    if spec.mode == SweepMode.ALL:
        check_cap(
            spec.n,
            settings.enumeration__max_all_n,
            "Digraph enumeration",
            spec.allow_oversize,
        )
    elif spec.mode == SweepMode.TOURNAMENTS:
        check_cap(
            spec.n,
            settings.enumeration__max_tournament_n,
            "Tournament enumeration",
            spec.allow_oversize,
        )
    else:
        validate_probabilities(
            spec.p_forward or settings.random__p_forward,
            spec.p_backward or settings.random__p_backward,
        )
    if spec.dedup:
        check_cap(
            spec.n,
            settings.enumeration__max_canonical_n,
            "Canonicalization",
            spec.allow_oversize,
        )


def evaluate_chunk(
    items: List[ChunkItem], label_prefix: str, lp_c5: bool
) -> List[InstanceOutcome]:
    """Worker entry point; items carry (index, n, sorted arcs)."""
    return _evaluate(ConjectureService(), items, label_prefix, lp_c5)


def _evaluate(
    service: ConjectureService, items: List[ChunkItem], label_prefix: str, lp_c5: bool
) -> List[InstanceOutcome]:
    outcomes = []
    for index, n, arcs in items:
        D = Digraph(n, frozenset(Arc(t, h) for t, h in arcs))
        label = f"{label_prefix}{index}"
        set_instance_id(label)
        try:
            report = service.consistency_check(D, instance=label, lp_c5=lp_c5)
        finally:
            clear_instance_id()
        outcomes.append(InstanceOutcome(index=index, report=report))
    return outcomes


class _Filter:
    """Prune then dedup, counting what was skipped."""

    def __init__(self, spec: EnumSpec) -> None:
        self.spec = spec
        self.seen: Set[Tuple[Arc, ...]] = set()
        self.duplicates = 0
        self.pruned = 0

    def admit(self, D: Digraph) -> bool:
        if self.spec.prune and not kl_prune(D):
            self.pruned += 1
            return False
        if self.spec.dedup:
            key = canonical_key(D, allow_oversize=self.spec.allow_oversize)
            if key in self.seen:
                self.duplicates += 1
                return False
            self.seen.add(key)
        return True


class SweepService:
    """Streams instances through consistency_check and aggregates the reports."""

    def __init__(self) -> None:
        self.conjecture_service = ConjectureService()

    def sweep(
        self,
        spec: EnumSpec,
        threads: Optional[int] = None,
        checkpoint_store: Optional[CheckpointStore] = None,
        resume: bool = False,
        on_outcome: Optional[Callable[[InstanceOutcome], None]] = None,
        lp_c5: bool = False,
    ) -> SearchReport:
        return asyncio.run(
            self.run_sweep(spec, threads, checkpoint_store, resume, on_outcome, lp_c5)
        )

    async def run_sweep(
        self,
        spec: EnumSpec,
        threads: Optional[int] = None,
        checkpoint_store: Optional[CheckpointStore] = None,
        resume: bool = False,
        on_outcome: Optional[Callable[[InstanceOutcome], None]] = None,
        lp_c5: bool = False,
    ) -> SearchReport:
        """
        Run a sweep. Instances are generated, pruned and deduplicated in
        order in this process; chunks are evaluated by up to `threads`
        workers and merged back by index, so on_outcome sees every outcome
        in index order regardless of the worker count.

        Raises:
            EnumerationException: SIZE_CAP_EXCEEDED, INVALID_PROBABILITY, or
                INVALID_SPEC when a checkpoint belongs to another sweep
        """
        check_spec(spec)
        threads = threads or settings.snc_threads
        total = instance_count(spec)
        start, violations_before = self._resume_point(spec, checkpoint_store, resume)

        started = time.perf_counter()
        instance_filter = _Filter(spec)
        for index in range(start):
            instance_filter.admit(instance_at(spec, index))
        instance_filter.duplicates = instance_filter.pruned = 0

        logger.info(
            "Sweep %s n=%d: %d instances from index %d with %d worker(s)",
            spec.mode,
            spec.n,
            total,
            start,
            threads,
        )

        counterexamples: Dict[str, List[int]] = {str(c): [] for c in ConjectureId}
        violating: List[int] = []
        examined = 0
        cursor = start
        interval = settings.sweep__checkpoint_interval
        next_checkpoint = start + interval
        label_prefix = f"{spec.mode}:{spec.n}:"

        executor: Optional[Executor] = (
            ProcessPoolExecutor(max_workers=threads) if threads > 1 else None
        )
        semaphore = asyncio.Semaphore(threads)
        loop = asyncio.get_running_loop()

        async def run_chunk(items: List[ChunkItem]) -> List[InstanceOutcome]:
            async with semaphore:
                if executor is None:
                    return _evaluate(
                        self.conjecture_service, items, label_prefix, lp_c5
                    )
                return await loop.run_in_executor(
                    executor, evaluate_chunk, items, label_prefix, lp_c5
                )

        try:
            chunks = self._chunks(spec, start, total, instance_filter)
            while True:
                batch = [chunk for _, chunk in zip(range(threads), chunks)]
                if not batch:
                    break
                results = await asyncio.gather(*(run_chunk(c) for c, _ in batch))
                cursor = batch[-1][1]
                for outcomes in results:
                    for outcome in outcomes:
                        examined += 1
                        for c in outcome.report.counterexamples:
                            counterexamples[str(c)].append(outcome.index)
                        if outcome.report.violations:
                            violating.append(outcome.index)
                        if on_outcome is not None:
                            on_outcome(outcome)
                if cursor >= next_checkpoint:
                    logger.info(
                        "Sweep progress: %d/%d indices, %d violation(s)",
                        cursor,
                        total,
                        violations_before + len(violating),
                    )
                    self._write_checkpoint(
                        checkpoint_store,
                        spec,
                        cursor,
                        violations_before + len(violating),
                    )
                    next_checkpoint = cursor + interval
        finally:
            if executor is not None:
                executor.shutdown()

        cursor = max(cursor, total)
        self._write_checkpoint(
            checkpoint_store, spec, cursor, violations_before + len(violating)
        )
        wall_time = time.perf_counter() - started
        logger.info(
            "Sweep finished: %d instances examined in %.2fs", examined, wall_time
        )
        return SearchReport(
            spec=spec,
            start_index=start,
            generated=total - start,
            instances=examined,
            duplicates=instance_filter.duplicates,
            pruned=instance_filter.pruned,
            counterexamples=counterexamples,
            violation_count=violations_before + len(violating),
            violating_instances=violating,
            wall_time_seconds=wall_time,
        )

    def _chunks(
        self, spec: EnumSpec, start: int, total: int, instance_filter: _Filter
    ) -> Iterator[Tuple[List[ChunkItem], int]]:
        """Admitted instances in chunks, each paired with the next index after it."""
        size = settings.sweep__chunk_size
        chunk: List[ChunkItem] = []
        for index in range(start, total):
            D = instance_at(spec, index)
            if instance_filter.admit(D):
                chunk.append((index, D.n, tuple(tuple(a) for a in D.sorted_arcs())))
            if len(chunk) == size:
                yield chunk, index + 1
                chunk = []
        if chunk:
            yield chunk, total

    def _resume_point(
        self, spec: EnumSpec, store: Optional[CheckpointStore], resume: bool
    ) -> Tuple[int, int]:
        if not (resume and store is not None and store.exists()):
            return 0, 0
        checkpoint = store.read()
        expected = self._checkpoint(spec, 0, 0)
        fields = ["mode", "n", "dedup", "prune"]
        if spec.mode == SweepMode.RANDOM:
            fields.append("seed")
        mismatched = {
            name: {
                "checkpoint": getattr(checkpoint, name),
                "sweep": getattr(expected, name),
            }
            for name in fields
            if getattr(checkpoint, name) != getattr(expected, name)
        }
        if mismatched:
            raise EnumerationException(
                f"Checkpoint does not match this sweep: {', '.join(mismatched)} differ",
                EnumerationErrorCode.INVALID_SPEC,
                {"mismatched": mismatched},
            )
        logger.info("Resuming sweep at index %d", checkpoint.next_index)
        return checkpoint.next_index, checkpoint.violations_so_far

    def _write_checkpoint(
        self,
        store: Optional[CheckpointStore],
        spec: EnumSpec,
        next_index: int,
        violations: int,
    ) -> None:
        if store is None:
            return
        store.write(self._checkpoint(spec, next_index, violations))

    @staticmethod
    def _checkpoint(spec: EnumSpec, next_index: int, violations: int) -> Checkpoint:
        return Checkpoint(
            mode=str(spec.mode),
            n=spec.n,
            next_index=next_index,
            violations_so_far=violations,
            seed=spec.seed,
            dedup=spec.dedup,
            prune=spec.prune,
        )


__all__ = [
    "SweepMode",
    "EnumSpec",
    "InstanceOutcome",
    "SearchReport",
    "SweepService",
    "instance_at",
    "instance_count",
    "check_spec",
    "evaluate_chunk",
]
