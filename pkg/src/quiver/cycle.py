"""The maps between non-oriented cyclic quivers and skeletal quiddity sequences.

sigma reads one entry per decreasing arrow, sigma_tilde one per increasing
arrow, and mu builds the quiver back from the block form of a sequence.
"""

from itertools import product

from src.models import Arrow, NonOrientedCycle, QuidditySequence
from src.quiddity import block_form


def _source_rotations(Q: NonOrientedCycle) -> list[int]:
    """Shifts k such that Q.rotate(k) has a source at vertex 1."""
    return [v - 1 for v in Q.sources()]


def _run_lengths(word: tuple[Arrow, ...], opener: Arrow) -> list[int]:
    """For each ``opener`` letter in order, the run of the other letter after it."""
    n = len(word)
    lengths = []
    for k, letter in enumerate(word):
        if letter is not opener:
            continue
        run = 0
        while run < n - 1 and word[(k + 1 + run) % n] is not opener:
            run += 1
        lengths.append(run)
    return lengths


def sigma(Q: NonOrientedCycle) -> QuidditySequence:
    """Entry c + 2 for each decreasing arrow followed by c increasing arrows.

    The quiver is first rotated to put a source at vertex 1, so the first
    entry belongs to the decreasing arrow ending the word.
    """
    rotated = Q.rotate(_source_rotations(Q)[0])
    word = rotated.word[-1:] + rotated.word[:-1]
    return QuidditySequence(tuple(c + 2 for c in _run_lengths(word, Arrow.DEC)))


def sigma_tilde(Q: NonOrientedCycle) -> QuidditySequence:
    """Entry d + 2 for each increasing arrow followed by d decreasing arrows."""
    rotated = Q.rotate(_source_rotations(Q)[0])
    return QuidditySequence(tuple(d + 2 for d in _run_lengths(rotated.word, Arrow.INC)))


def mu(q: QuidditySequence) -> NonOrientedCycle:
    """Quiver with a-2 increasing then k+1 decreasing arrows per block (a, k).

    Raises:
        NotSkeletalError: If q is trivial or contains a 1
    """
    word: list[Arrow] = []
    for head, run in block_form(q):
        word.extend([Arrow.INC] * (head - 2))
        word.extend([Arrow.DEC] * (run + 1))
    return NonOrientedCycle(tuple(word))


def canonicalize(Q: NonOrientedCycle) -> NonOrientedCycle:
    """Least rotation, as a letter string, among those with a source at vertex 1."""
    candidates = [Q.rotate(k) for k in _source_rotations(Q)]
    return min(candidates, key=str)


def enumerate_cycles(n: int) -> list[NonOrientedCycle]:
    """One canonical word per unlabeled non-oriented cycle on n vertices."""
    found = {}
    for letters in product((Arrow.INC, Arrow.DEC), repeat=n):
        if Arrow.INC not in letters or Arrow.DEC not in letters:
            continue
        canonical = canonicalize(NonOrientedCycle(letters))
        found[str(canonical)] = canonical
    return [found[key] for key in sorted(found)]
