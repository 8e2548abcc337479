import pytest

from hookgames import (
    BoardParams,
    DiagonalSeq,
    DomainError,
    GameMap,
    MhrgPosition,
    ShiftedDiagram,
    YoungDiagram,
    all_shifted,
    diagonal_of,
    from_shifted,
    is_symmetric,
    reachable,
    start_position,
    to_shifted,
    verify_isomorphism,
    verify_staircase_iso,
    verify_widening,
    widen_diagonal,
    widen_position,
)
from hookgames.isomorphisms import verify_staircase_range, verify_widening_range
from hookgames.mhrg import profile_options, reachable_profiles


def test_widen_diagonal_examples():
    seq = diagonal_of(BoardParams(1, 3), YoungDiagram((3,)))
    out = widen_diagonal(seq)
    assert out.board == BoardParams(1, 4)
    assert out.values == (0, 1, 1, 1, 1, 0)
    assert out == diagonal_of(BoardParams(1, 4), YoungDiagram((4,)))

    seq = DiagonalSeq(BoardParams(3, 5), (0, 1, 2, 3, 2, 2, 1, 1, 0))
    assert widen_diagonal(seq).values == (0, 1, 2, 3, 2, 2, 2, 1, 1, 0)

    zero = DiagonalSeq(BoardParams(2, 2), (0,) * 5)
    assert widen_diagonal(zero).values == (0,) * 6

    with pytest.raises(DomainError):
        widen_diagonal(diagonal_of(BoardParams(2, 3), YoungDiagram((3, 1))))


def test_widen_position_carries_start_to_start():
    for m, n in [(1, 1), (2, 2), (2, 4), (3, 5)]:
        wide = widen_position(start_position(BoardParams(m, n)))
        assert wide == start_position(BoardParams(m, n + 1))


def test_is_symmetric_examples():
    assert is_symmetric(diagonal_of(BoardParams(3, 3), YoungDiagram((3, 3, 3))))
    assert not is_symmetric(DiagonalSeq(BoardParams(2, 2), (0, 1, 1, 0, 0)))
    # (5,4,3) on the 3x5 board: the pair at diagonals (-1, 3) is (2, 1),
    # so the profile fails the a_i == a_{n-m-i} test.
    assert not is_symmetric(DiagonalSeq(BoardParams(3, 5), (0, 1, 2, 3, 2, 2, 1, 1, 0)))


def test_to_shifted_examples():
    assert to_shifted(start_position(BoardParams(3, 4))).parts == (3, 2, 1)
    empty = MhrgPosition(BoardParams(3, 4), YoungDiagram(()))
    assert to_shifted(empty).parts == ()
    with pytest.raises(DomainError):
        to_shifted(start_position(BoardParams(3, 5)))
    with pytest.raises(DomainError):
        # asymmetric profile on the right board shape
        to_shifted(MhrgPosition(BoardParams(3, 4), YoungDiagram((4,))))


def test_from_shifted_examples():
    assert from_shifted(ShiftedDiagram((3, 2, 1)), 3) == start_position(BoardParams(3, 4))
    assert from_shifted(ShiftedDiagram(()), 3).diagram.rows == ()


def test_round_trip_between_rectangle_and_staircase():
    for n in range(1, 6):
        board = BoardParams(n, n + 1)
        for s in all_shifted(n):
            assert to_shifted(from_shifted(s, n)) == s
        for pos in reachable(board):
            assert from_shifted(to_shifted(pos), n) == pos


def test_widening_image_is_the_reachable_set():
    # the widened reachable set IS the reachable set of the wider board
    for m, n in [(1, 3), (2, 2), (2, 4), (3, 3), (3, 5)]:
        board = BoardParams(m, n)
        image = {widen_position(pos) for pos in reachable(board)}
        assert image == reachable(BoardParams(m, n + 1))


def test_centre_equality_on_widened_boards():
    for m, n in [(1, 3), (2, 4), (3, 3), (4, 6)]:
        centre = (n - m) // 2
        for pos in reachable(BoardParams(m, n + 1)):
            seq = pos.profile()
            assert seq[centre] == seq[centre + 1]


def test_verify_widening_reports_pass():
    report = verify_widening(2, 4)
    assert report.passed
    assert report.checked == len(reachable_profiles(BoardParams(2, 4)))
    payload = report.to_json()
    assert payload["violations"] == []
    assert payload["map"].startswith("widen")

    assert all(r.passed for r in verify_widening_range(6))


def test_verify_staircase_reports_pass():
    report = verify_staircase_iso(4)
    assert report.passed and report.checked == 16
    assert all(r.passed for r in verify_staircase_range(5))


def test_verify_isomorphism_catches_corruption():
    board = BoardParams(2, 2)
    src = sorted(reachable_profiles(board))
    tgt = sorted(reachable_profiles(BoardParams(2, 3)))
    slot = 2  # centre duplication slot for the 2x2 board

    def corrupted(vals, a=src[0], b=src[1]):
        if vals == a:
            vals = b
        elif vals == b:
            vals = a
        return vals[: slot + 1] + vals[slot : slot + 1] + vals[slot + 1 :]

    gmap = GameMap("corrupted", "mhrg 2x2", "mhrg 2x3", corrupted)
    report = verify_isomorphism(
        gmap,
        src,
        tgt,
        lambda v: profile_options(v, 2, 2),
        lambda v: profile_options(v, 2, 3),
        render=lambda v: repr(bytes(v)),
    )
    assert not report.passed
    kinds = {v.kind for v in report.violations}
    assert "options-mismatch" in kinds
    witness = [v for v in report.violations if v.kind == "options-mismatch"][0]
    assert "source" in witness.witness


def test_verify_isomorphism_catches_non_injective_and_uncovered():
    gmap = GameMap("collapse", "chain-2", "chain-1", lambda p: min(p, 1))
    report = verify_isomorphism(
        gmap,
        [0, 1, 2],
        [0, 1],
        lambda p: [p - 1] if p else [],
        lambda p: [p - 1] if p else [],
    )
    kinds = {v.kind for v in report.violations}
    assert "not-injective" in kinds
    assert "target-not-covered" not in kinds  # both targets are hit


def test_grundy_transport_along_working_maps():
    report = verify_widening(3, 5)
    assert report.passed  # includes per-position value transport
    report = verify_staircase_iso(5)
    assert report.passed
