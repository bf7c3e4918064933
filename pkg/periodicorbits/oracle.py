"""Brute force periodic point counts

The functions here avoid the divisor sum machinery entirely. A permutation is
laid out from orbit counts and its periodic points are counted by following
the image array, so agreement with `transforms.per_transform` is an
independent check. The necklace and closed walk counters play the same role
for the shift generators.
"""
import itertools
import logging
import math
import operator


MAX_POINTS = 10 ** 7


class BudgetExceededError(ValueError):
    """A brute force construction would be too large"""


class PermutationMap(object):
    """A permutation of the points `0..domain_size-1`

    Parameters
    ----------
    image : [int]
        `image[i]` is the successor of point i.
    cycle_manifest : [(int, int)]
        Pairs of cycle length and number of cycles of that length.
    """

    def __init__(self, image, cycle_manifest):
        self.image = image
        self.cycle_manifest = tuple(cycle_manifest)

    @property
    def domain_size(self):
        """Number of points"""
        return len(self.image)

    def is_bijection(self):
        """Whether the image array is a permutation"""
        seen = bytearray(self.domain_size)
        for point in self.image:
            if not 0 <= point < self.domain_size or seen[point]:
                return False
            seen[point] = 1
        return True

    def cycle_lengths(self):
        """Multiset of cycle lengths found by walking the image array"""
        lengths = []
        seen = bytearray(self.domain_size)
        for start in range(self.domain_size):
            if seen[start]:
                continue
            length = 0
            point = start
            while not seen[point]:
                seen[point] = 1
                point = self.image[point]
                length += 1
            lengths.append(length)
        return sorted(lengths)

    def __repr__(self):
        return 'PermutationMap(domain_size={:d}, cycles={})'.format(
            self.domain_size, list(self.cycle_manifest))


def build_permutation(orbit_counts, *, max_points=MAX_POINTS):
    """Lay out a permutation with prescribed numbers of cycles

    Cycles are placed consecutively in increasing length, and each cycle
    sends a point to the next one in its block, wrapping at the end.

    Parameters
    ----------
    orbit_counts : [int]
        Non-negative number of cycles of each length, from length one.
    max_points : int, optional
        Refuse to build permutations on more points than this.
    """
    manifest = []
    size = 0
    for length, count in enumerate(orbit_counts, 1):
        count = operator.index(count)
        if count < 0:
            raise ValueError(
                'orbit count at index {:d} is negative: {:d}'.format(
                    length, count))
        if count:
            manifest.append((length, count))
        size += length * count
    if size > max_points:
        raise BudgetExceededError(
            'permutation would need {:d} points, more than {:d}'.format(
                size, max_points))
    logging.debug('building permutation on %d points', size)
    image = []
    for length, count in manifest:
        for _ in range(count):
            base = len(image)
            image.extend(base + (i + 1) % length for i in range(length))
    return PermutationMap(image, manifest)


def count_fixed_points(perm, k, *, fast=False):
    """Number of points fixed by the k-th iterate

    The default path applies the image array k times to every point. With
    `fast` the count is read off the cycle manifest instead: a cycle of
    length n is fixed pointwise exactly when n divides k.
    """
    k = operator.index(k)
    if k < 1:
        raise ValueError('iterate must be positive, got {:d}'.format(k))
    if fast:
        return sum(length * count for length, count in perm.cycle_manifest
                   if k % length == 0)
    image = perm.image
    current = list(range(perm.domain_size))
    for _ in range(k):
        current = [image[point] for point in current]
    return sum(1 for point, end in enumerate(current) if point == end)


def fixed_point_counts(perm, num):
    """Fixed points of every iterate from 1 to num

    The iterates are built up one application of the image array at a
    time."""
    num = operator.index(num)
    if num < 1:
        raise ValueError('number of iterates must be positive, got {:d}'
                         .format(num))
    image = perm.image
    current = list(range(perm.domain_size))
    counts = []
    for _ in range(num):
        current = [image[point] for point in current]
        counts.append(sum(1 for point, end in enumerate(current)
                          if point == end))
    return counts


def count_lyndon_words(alphabet, length):
    """Number of aperiodic necklaces of a given length

    Generates every Lyndon word of length at most `length` over `alphabet`
    letters with Duval's algorithm and counts those of exactly that length.
    Each such word is one orbit of length `length` of the full shift.
    """
    alphabet = operator.index(alphabet)
    length = operator.index(length)
    if alphabet < 1 or length < 1:
        raise ValueError('alphabet size and length must be positive')
    count = 0
    word = [-1]
    while word:
        word[-1] += 1
        if len(word) == length:
            count += 1
        # extend periodically to full length, then strip maximal letters
        size = len(word)
        while len(word) < length:
            word.append(word[-size])
        while word and word[-1] == alphabet - 1:
            word.pop()
    return count


def count_sft_points(matrix, n):
    """Number of closed walks of length n in a multigraph

    `matrix[i][j]` is the number of edges from vertex i to vertex j. Every
    vertex sequence is enumerated and the edge multiplicities along it are
    multiplied, without forming any matrix power.
    """
    n = operator.index(n)
    if n < 1:
        raise ValueError('walk length must be positive, got {:d}'.format(n))
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError('matrix must be square')
    if any(entry < 0 for row in matrix for entry in row):
        raise ValueError('edge counts must be non-negative')
    total = 0
    for walk in itertools.product(range(size), repeat=n):
        total += math.prod(matrix[walk[i]][walk[(i + 1) % n]]
                           for i in range(n))
    return total
