import pytest
from hypothesis import given
from hypothesis import strategies as st

from dcore.partitions import (Partition, PartitionError, ProblemInstance, as_beta, beta_set,
                              beta_to_json, has_d_distinct_parts, hook_lengths,
                              hook_lengths_reference, hook_set, is_member_X, is_s_core,
                              is_twin_free, partition_from_beta)

FIG1 = (8, 6, 3, 1)

partitions = st.lists(st.integers(1, 12), max_size=8).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True))))


def test_hook_lengths_figure():
    assert hook_lengths(FIG1) == [
        [11, 9, 8, 6, 5, 4, 2, 1],
        [8, 6, 5, 3, 2, 1],
        [4, 2, 1],
        [1],
    ]


def test_hook_lengths_trivial():
    assert hook_lengths(()) == []
    assert hook_lengths((1,)) == [[1]]


@given(partitions)
def test_hook_lengths_match_reference(p):
    assert hook_lengths(p) == hook_lengths_reference(p)


def test_hook_set_figure():
    assert hook_set(FIG1) == {1, 2, 3, 4, 5, 6, 8, 9, 11}


def test_beta_set_examples():
    assert beta_set(FIG1) == (1, 4, 8, 11)
    assert beta_set(()) == ()
    assert beta_set((5,)) == (5,)


def test_partition_from_beta_examples():
    assert partition_from_beta({11, 8, 4, 1}) == Partition(FIG1)
    assert partition_from_beta(set()) == Partition()
    assert partition_from_beta({2, 1}) == Partition((1, 1))


@given(partitions)
def test_beta_round_trip(p):
    assert partition_from_beta(beta_set(p)) == p


@given(partitions)
def test_beta_set_is_first_column_hooks(p):
    first_col = sorted(row[0] for row in hook_lengths(p))
    assert beta_set(p) == tuple(first_col)


def test_is_s_core_figure_caption():
    b = beta_set(FIG1)
    hooks = {1, 2, 3, 4, 5, 6, 8, 9, 11}
    for s in range(1, 20):
        assert is_s_core(b, s) == (s not in hooks)
    assert is_s_core((), 3)


@given(partitions, st.integers(1, 15))
def test_s_core_iff_no_hook_of_length_s(p, s):
    assert is_s_core(beta_set(p), s) == (s not in hook_set(p))


@given(partitions, st.integers(1, 15))
def test_s_core_excludes_s(p, s):
    b = beta_set(p)
    if is_s_core(b, s):
        assert s not in b


def test_twin_free_examples():
    assert is_twin_free((1, 4, 8, 11), 2)
    assert not is_twin_free((1, 4, 8, 11), 3)
    assert is_twin_free((), 5)


def test_d_distinct_examples():
    assert has_d_distinct_parts(FIG1, 2)
    assert not has_d_distinct_parts(FIG1, 3)
    assert has_d_distinct_parts((), 4)


@given(partitions, st.integers(1, 5))
def test_d_distinct_iff_twin_free(p, d):
    assert has_d_distinct_parts(p, d) == is_twin_free(beta_set(p), d)


def test_member_examples():
    assert is_member_X((), ProblemInstance(3, 2, 5))
    inst = ProblemInstance(1, 1, 3)
    assert is_member_X((1,), inst)
    assert is_member_X((2,), inst)
    assert not is_member_X((1, 2), inst)
    assert not is_member_X((6,), ProblemInstance(2, 2, 5))


@pytest.mark.parametrize("bad", [(0,), (2, -1), (1, 3), (2.5,)])
def test_partition_rejects_malformed(bad):
    with pytest.raises(PartitionError):
        Partition(bad)


def test_beta_rejects_malformed():
    with pytest.raises(PartitionError):
        as_beta([1, 1])
    with pytest.raises(PartitionError):
        as_beta([0, 2])


def test_problem_instance_validation():
    with pytest.raises(ValueError):
        ProblemInstance(0, 1, 1)
    with pytest.raises(ValueError):
        ProblemInstance(1, 2, 0)
    ProblemInstance(2, 2, -3)


def test_json_round_trip():
    p = Partition(FIG1)
    assert p.to_json() == "[8, 6, 3, 1]"
    assert Partition.from_json(p.to_json()) == p
    assert beta_to_json({11, 1, 8, 4}) == "[1, 4, 8, 11]"
    assert p.size == 18
