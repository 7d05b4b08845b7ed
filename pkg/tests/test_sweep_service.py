"""Tests for sweep orchestration, filtering and checkpoint resume."""

from concurrent.futures import ThreadPoolExecutor

import pytest
from pydantic import ValidationError

from src.core.error_codes import EnumerationErrorCode
from src.core.exceptions import EnumerationException
from src.services import sweep_service as sweep_service_module
from src.services.enumeration_service import digraph_at_index, random_digraph_at_index
from src.services.sweep_service import (
    EnumSpec,
    SweepMode,
    SweepService,
    instance_at,
    instance_count,
)
from src.stores.checkpoint_store import Checkpoint, CheckpointStore


@pytest.fixture
def sweep_service() -> SweepService:
    return SweepService()


def test_random_mode_requires_sample_count():
    with pytest.raises(ValidationError):
        EnumSpec(n=4, mode=SweepMode.RANDOM)


def test_instance_addressing():
    spec = EnumSpec(n=3, mode=SweepMode.ALL)
    assert instance_count(spec) == 27
    assert instance_at(spec, 5) == digraph_at_index(3, 5)
    random_spec = EnumSpec(n=5, mode=SweepMode.RANDOM, sample_count=3, seed=11)
    assert instance_count(random_spec) == 3
    assert instance_at(random_spec, 2) == random_digraph_at_index(
        5, "1/3", "1/3", 11, 2
    )


def test_all_digraphs_on_three_vertices(sweep_service):
    report = sweep_service.sweep(EnumSpec(n=3, mode=SweepMode.ALL))
    assert report.instances == 27
    assert report.generated == 27
    assert report.start_index == 0
    assert report.clean
    assert set(report.counterexamples) == {"C1", "C2", "C3", "C4", "C5", "C6"}


def test_tournaments(sweep_service):
    report = sweep_service.sweep(EnumSpec(n=4, mode=SweepMode.TOURNAMENTS))
    assert report.instances == 64
    assert report.clean


def test_random_sweep(sweep_service):
    spec = EnumSpec(n=5, mode=SweepMode.RANDOM, sample_count=10, seed=3)
    report = sweep_service.sweep(spec)
    assert report.instances == 10
    assert report.clean


def test_dedup_keeps_one_per_class(sweep_service):
    report = sweep_service.sweep(EnumSpec(n=3, mode=SweepMode.ALL, dedup=True))
    assert report.instances == 7
    assert report.duplicates == 20


def test_prune_keeps_cyclic_triangles(sweep_service, override_settings):
    override_settings(conjecture__kl_min_out_degree=1)
    report = sweep_service.sweep(EnumSpec(n=3, mode=SweepMode.ALL, prune=True))
    assert report.instances == 2
    assert report.pruned == 25


def test_size_cap(sweep_service):
    with pytest.raises(EnumerationException) as exc_info:
        sweep_service.sweep(EnumSpec(n=9, mode=SweepMode.ALL))
    assert exc_info.value.error_code == EnumerationErrorCode.SIZE_CAP_EXCEEDED


def test_invalid_random_probabilities(sweep_service):
    spec = EnumSpec(
        n=4, mode=SweepMode.RANDOM, sample_count=2, p_forward="3/4", p_backward="1/2"
    )
    with pytest.raises(EnumerationException) as exc_info:
        sweep_service.sweep(spec)
    assert exc_info.value.error_code == EnumerationErrorCode.INVALID_PROBABILITY


def test_outcomes_arrive_in_index_order(sweep_service, override_settings):
    override_settings(sweep__chunk_size=5)
    seen = []
    sweep_service.sweep(
        EnumSpec(n=3, mode=SweepMode.ALL), on_outcome=lambda o: seen.append(o.index)
    )
    assert seen == list(range(27))


def test_checkpoint_written_at_end(sweep_service, tmp_path, override_settings):
    override_settings(sweep__chunk_size=4, sweep__checkpoint_interval=10)
    store = CheckpointStore(tmp_path / "sweep.ckpt")
    sweep_service.sweep(EnumSpec(n=3, mode=SweepMode.ALL), checkpoint_store=store)
    assert store.read() == Checkpoint(
        mode="all", n=3, next_index=27, violations_so_far=0
    )


def test_resume_from_checkpoint(sweep_service, tmp_path):
    store = CheckpointStore(tmp_path / "sweep.ckpt")
    store.write(Checkpoint(mode="all", n=3, next_index=20, violations_so_far=4))
    report = sweep_service.sweep(
        EnumSpec(n=3, mode=SweepMode.ALL), checkpoint_store=store, resume=True
    )
    assert report.start_index == 20
    assert report.instances == 7
    assert report.violation_count == 4
    assert not report.clean


def test_resume_without_checkpoint_starts_at_zero(sweep_service, tmp_path):
    store = CheckpointStore(tmp_path / "missing.ckpt")
    report = sweep_service.sweep(
        EnumSpec(n=3, mode=SweepMode.ALL), checkpoint_store=store, resume=True
    )
    assert report.start_index == 0
    assert store.exists()


def test_resume_rejects_foreign_checkpoint(sweep_service, tmp_path):
    store = CheckpointStore(tmp_path / "sweep.ckpt")
    store.write(Checkpoint(mode="tournaments", n=3, next_index=2))
    with pytest.raises(EnumerationException) as exc_info:
        sweep_service.sweep(
            EnumSpec(n=3, mode=SweepMode.ALL), checkpoint_store=store, resume=True
        )
    assert exc_info.value.error_code == EnumerationErrorCode.INVALID_SPEC


@pytest.mark.parametrize(
    "checkpoint,spec,field",
    [
        (
            Checkpoint(mode="all", n=3, next_index=5, dedup=True),
            EnumSpec(n=3, mode=SweepMode.ALL),
            "dedup",
        ),
        (
            Checkpoint(mode="all", n=3, next_index=5),
            EnumSpec(n=3, mode=SweepMode.ALL, prune=True),
            "prune",
        ),
        (
            Checkpoint(mode="random", n=4, next_index=2, seed=7),
            EnumSpec(n=4, mode=SweepMode.RANDOM, sample_count=5, seed=8),
            "seed",
        ),
    ],
)
def test_resume_rejects_changed_filters(
    sweep_service, tmp_path, checkpoint, spec, field
):
    store = CheckpointStore(tmp_path / "sweep.ckpt")
    store.write(checkpoint)
    with pytest.raises(EnumerationException) as exc_info:
        sweep_service.sweep(spec, checkpoint_store=store, resume=True)
    assert exc_info.value.error_code == EnumerationErrorCode.INVALID_SPEC
    assert set(exc_info.value.details["mismatched"]) == {field}


def test_checkpoint_records_seed_and_filters(sweep_service, tmp_path):
    store = CheckpointStore(tmp_path / "sweep.ckpt")
    spec = EnumSpec(n=4, mode=SweepMode.RANDOM, sample_count=3, seed=5, dedup=True)
    sweep_service.sweep(spec, checkpoint_store=store)
    checkpoint = store.read()
    assert (checkpoint.seed, checkpoint.dedup, checkpoint.prune) == (5, True, False)
    report = sweep_service.sweep(spec, checkpoint_store=store, resume=True)
    assert report.start_index == 3


@pytest.mark.parametrize(
    "n",
    [
        2,
        3,
        pytest.param(4, marks=pytest.mark.slow),
        pytest.param(5, marks=pytest.mark.slow),
    ],
)
def test_prune_keeps_the_violation_set(sweep_service, override_settings, n):
    override_settings(conjecture__kl_min_out_degree=1)
    plain = sweep_service.sweep(EnumSpec(n=n, mode=SweepMode.ALL))
    pruned = sweep_service.sweep(EnumSpec(n=n, mode=SweepMode.ALL, prune=True))
    assert pruned.instances + pruned.pruned == plain.instances
    assert pruned.violating_instances == plain.violating_instances
    assert pruned.counterexamples == plain.counterexamples


def test_worker_count_defaults_to_snc_threads(
    sweep_service, override_settings, monkeypatch
):
    override_settings(snc_threads=2, sweep__chunk_size=4)
    pools = []

    def thread_pool(max_workers):
        pools.append(max_workers)
        return ThreadPoolExecutor(max_workers=max_workers)

    monkeypatch.setattr(sweep_service_module, "ProcessPoolExecutor", thread_pool)
    spec = EnumSpec(n=3, mode=SweepMode.ALL)
    pooled = []
    sweep_service.sweep(spec, on_outcome=pooled.append)
    assert pools == [2]
    single = []
    sweep_service.sweep(spec, threads=1, on_outcome=single.append)
    assert pools == [2]
    assert [o.index for o in pooled] == list(range(27))
    assert [o.report for o in pooled] == [o.report for o in single]


async def test_run_sweep_in_event_loop(sweep_service):
    report = await sweep_service.run_sweep(EnumSpec(n=2, mode=SweepMode.ALL))
    assert report.instances == 3
    assert report.clean


@pytest.mark.slow
def test_all_digraphs_on_four_vertices(sweep_service):
    report = sweep_service.sweep(EnumSpec(n=4, mode=SweepMode.ALL))
    assert report.instances == 729
    assert report.clean


@pytest.mark.slow
def test_all_digraphs_on_five_vertices(sweep_service):
    report = sweep_service.sweep(EnumSpec(n=5, mode=SweepMode.ALL))
    assert report.instances == 59049
    assert report.clean


@pytest.mark.slow
def test_tournaments_on_six_vertices(sweep_service):
    report = sweep_service.sweep(EnumSpec(n=6, mode=SweepMode.TOURNAMENTS))
    assert report.instances == 32768
    assert report.counterexamples["C1"] == []
