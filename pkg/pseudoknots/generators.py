"""The generator grammar, splittings and the decomposability parser."""
from collections import namedtuple
from itertools import combinations, combinations_with_replacement
import logging

from pseudoknots import core, exceptions


logger = logging.getLogger(__name__)

RELAXED = 'relaxed'
STRICT_PROPER = 'strict-proper'
SPLITTING_MODES = (RELAXED, STRICT_PROPER)


class Generator():
    """A named generator structure of the grammar.

        Parameters:
            name (str): label of the generator.
            structure (obj): the generator Structure.
    """
    def __init__(self, name, structure):
        self.name = name
        self.structure = structure
        self.elements = core.element_order(structure)

        bases = list(range(1, structure.n + 1))
        self.children = tuple(
            (element.position - 1,) if isinstance(element, core.UnpairedBase)
            else (element.first - 1, element.second - 1)
            for element in self.elements
        )
        self.paired = frozenset(
            (first - 1, second - 1) for first, second in structure.pairings
        )
        # Interval index pairs charged a pair deletion when a pairing joins them
        self.loose = tuple(
            (first - 1, second - 1) for first, second in combinations(bases, 2)
            if (first - 1, second - 1) not in self.paired
        )

    @property
    def kind(self):
        """int: 0 or 1, the type of the generator structure."""
        return self.structure.kind

    @property
    def element_count(self):
        """int: number of structural elements."""
        return len(self.elements)

    @property
    def leg_sizes(self):
        """tuple: bases per leg, one entry for type 0 and two for type 1."""
        return tuple(leg.length for leg in self.structure.legs())

    def __repr__(self):
        return 'Generator({!r}, {!r})'.format(self.name, self.structure)


def _builtin(name, n, pairings, gap=None):
    return Generator(name, core.Structure(n, pairings, gap))


def builtin_generators():
    """Returns the built-in generators in grammar order."""
    return [
        _builtin('concat', 2, []),
        _builtin('loop', 2, [(1, 2)]),
        _builtin('disconn', 2, [], 1),
        _builtin('lembed', 1, [], 1),
        _builtin('rembed', 1, [], 0),
        _builtin('lconcat', 3, [(2, 3)], 2),
        _builtin('rconcat', 3, [(1, 2)], 1),
        _builtin('linsert', 3, [(1, 3)], 2),
        _builtin('rinsert', 3, [(1, 3)], 1),
        _builtin('lwrap', 4, [(1, 3), (2, 4)], 3),
        _builtin('rwrap', 4, [(1, 3), (2, 4)], 1),
        _builtin('nest', 4, [(1, 4), (2, 3)], 2),
        _builtin('cross', 4, [(1, 3), (2, 4)], 2),
    ]


class GeneratorSet():
    """An immutable, ordered set of generators.

        Parameters:
            generators (iterable): the Generator objects, in the order
                the parser and aligner try them.
    """
    def __init__(self, generators):
        self.generators = tuple(generators)
        names = [generator.name for generator in self.generators]

        if len(set(names)) != len(names):
            raise exceptions.StructureError('Generator names must be unique.')

    @property
    def m(self):  # pylint: disable=invalid-name
        """int: the largest number of bases in any leg of any generator."""
        return max(
            (max(generator.leg_sizes) for generator in self.generators), default=0
        )

    def of_kind(self, kind):
        """Returns the generators of type kind in grammar order."""
        return [generator for generator in self.generators if generator.kind == kind]

    def get(self, name):
        """Returns the generator called name, None if absent."""
        for generator in self.generators:
            if generator.name == name:
                return generator
        return None

    def extend(self, generators):
        """Returns a new set with the validated generators appended."""
        generators = list(generators)

        for generator in generators:
            validate_generator(generator)

        return GeneratorSet(self.generators + tuple(generators))

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return 'GeneratorSet({})'.format(', '.join(g.name for g in self.generators))


def builtin_generator_set():
    """Returns the grammar of the built-in generators (m = 3)."""
    return GeneratorSet(builtin_generators())


def validate_generator(generator):
    """Rejects generators that would make parsing meaningless.

        Raises:
            StructureError: the generator is empty or an identity.
    """
    structure = generator.structure

    if structure.n == 0:
        raise exceptions.StructureError('Generator {} has no bases.'.format(generator.name))

    if core.is_identity(structure):
        raise exceptions.StructureError('Generator {} is an identity.'.format(generator.name))


def parse_generators(text):
    """Parses a generator definition document.

        One generator per line: ``name n gap i:j,i:j,...``, with ``-``
        as the gap of a type-0 generator. The pairing field may be
        omitted or ``-`` when there are no pairings. ``#`` starts a
        comment.

        Returns:
            list: the Generator objects in file order.

        Raises:
            BadGeneratorLine: a line is malformed.
    """
    generators = []

    for number, line in enumerate(text.splitlines(), start=1):
        fields = line.split('#', 1)[0].split()

        if not fields:
            continue

        if len(fields) not in (3, 4):
            raise exceptions.BadGeneratorLine(
                'Expected "name n gap pairings".', line=number, column=1
            )

        name, count, gap = fields[:3]
        pairing_field = fields[3] if len(fields) == 4 else '-'

        try:
            count = int(count)
            gap = None if gap == '-' else int(gap)
            pairings = [] if pairing_field == '-' else [
                tuple(int(end) for end in pairing.split(':'))
                for pairing in pairing_field.split(',')
            ]
            if any(len(pairing) != 2 for pairing in pairings):
                raise ValueError(pairing_field)
            generator = Generator(name, core.Structure(count, pairings, gap))
            validate_generator(generator)
        except (ValueError, exceptions.StructureError) as error:
            raise exceptions.BadGeneratorLine(
                'Invalid generator {!r}: {}'.format(name, error), line=number, column=1
            )

        logger.info('Loaded generator %s %r', name, generator.structure)
        generators.append(generator)

    return generators


def load_generator_set(text=None, base=None):
    """Returns base (the built-in set by default) extended by a document."""
    base = builtin_generator_set() if base is None else base

    if not text:
        return base

    return base.extend(parse_generators(text))


class Splitting(namedtuple('Splitting', ['intervals'])):
    """One interval per generator base; empty intervals are ``core.EMPTY``."""
    __slots__ = ()

    def index(self):
        """Returns a dict from each covered position to its interval index."""
        return {
            position: number
            for number, interval in enumerate(self.intervals)
            for position in interval.positions()
        }

    def __repr__(self):
        return '({})'.format(','.join(repr(interval) for interval in self.intervals))


def region_live(structure, region):
    """Returns per interval the positions alive in the region.

        A position is alive when it is unpaired or its partner lies in
        one of the region's intervals.
    """
    def inside(position):
        return any(interval.contains(position) for interval in region)

    return tuple(
        [
            position for position in interval.positions()
            if structure.partner(position) is None or inside(structure.partner(position))
        ]
        for interval in region
    )


def trim_region(live):
    """Returns the canonical region spanning the alive positions of each interval."""
    return tuple(
        core.make_interval(positions[0], positions[-1]) if positions else core.EMPTY
        for positions in live
    )


def region_rank(sizes):
    """Returns the tie-break rank of a region with the given leg sizes.

        A 1-region with two non-empty legs ranks below a 0-region, which
        ranks below a 1-region with an empty leg. Paired with the base
        count this measure strictly decreases along every admitted
        parent to child step.
    """
    if len(sizes) == 1:
        return 1
    if sizes[0] and sizes[1]:
        return 0
    return 2


def leg_groups(positions, parts, strict):
    """Yields every split of positions into parts consecutive groups.

        Groups may be empty unless strict is set. Splits come in
        lexicographic order of their cut points.
    """
    count = len(positions)

    if parts == 0:
        if not positions:
            yield ()
        return

    if strict:
        cut_sets = combinations(range(1, count), parts - 1)
    else:
        cut_sets = combinations_with_replacement(range(count + 1), parts - 1)

    for cuts in cut_sets:
        bounds = (0,) + cuts + (count,)
        yield tuple(positions[bounds[k]:bounds[k + 1]] for k in range(parts))


def split_region(generator, structure, live, strict=False):
    """Yields (groups, splitting) for every splitting of an alive region.

        Parameters:
            generator (obj): the Generator to split for.
            structure (obj): the Structure the region belongs to.
            live (tuple): alive positions per leg, from ``region_live``.
            strict (bool): require the proper, non-empty splittings.
    """
    sizes = generator.leg_sizes

    if len(sizes) != len(live):
        raise exceptions.WrongType(
            'Generator {} is of type {}, the region of type {}.'.format(
                generator.name, generator.kind, len(live) - 1
            )
        )

    per_leg = [list(leg_groups(positions, parts, strict)) for positions, parts in zip(live, sizes)]

    for choice in _product(per_leg):
        groups = tuple(group for leg in choice for group in leg)

        if strict and not _is_proper(structure, generator, groups):
            continue

        yield groups, Splitting(trim_region(groups))


def _product(per_leg):
    if len(per_leg) == 1:
        for leg in per_leg[0]:
            yield (leg,)
        return

    for left in per_leg[0]:
        for right in per_leg[1]:
            yield (left, right)


def _is_proper(structure, generator, groups):
    """Returns whether every group keeps an unpaired base or a compatible pairing end."""
    index = {position: number for number, group in enumerate(groups) for position in group}

    for number, group in enumerate(groups):
        for position in group:
            partner = structure.partner(position)

            if partner is None:
                break

            other = index[partner]
            if other == number or (min(number, other), max(number, other)) in generator.paired:
                break
        else:
            return False

    return True


def enumerate_splittings(generator, structure, first, second=None, mode=RELAXED):
    """Yields the splittings of a structure's interval(s) for a generator.

        Parameters:
            generator (obj): the Generator; type 1 iff second is given.
            structure (obj): the Structure being split.
            first (tuple): the interval I.
            second (tuple): the interval J of a 1-region.
            mode (str): ``relaxed`` admits empty intervals;
                ``strict-proper`` yields only proper splittings.

        Raises:
            WrongType: the generator type does not match the region.
    """
    region = (core.make_interval(*first),)
    if second is not None:
        region += (core.make_interval(*second),)

    if generator.kind != len(region) - 1:
        raise exceptions.WrongType(
            'Generator {} does not fit a region of {} interval(s).'.format(generator.name, len(region))
        )

    live = region_live(structure, region)

    for _, splitting in split_region(generator, structure, live, strict=mode == STRICT_PROPER):
        yield splitting


def incompatible_pairings(structure, splitting, generator):
    """Returns the pairings joining two intervals that the generator does not pair."""
    index = splitting.index()
    pairings = set()

    for first, second in structure.pairings:
        if first not in index or second not in index:
            continue

        left, right = index[first], index[second]
        if left != right and (left, right) not in generator.paired:
            pairings.add(core.Pairing(first, second))

    return pairings


class DecompositionTree():
    """A witness of decomposability.

        Leaves hold an identity structure; nodes hold a generator, the
        splitting used and one subtree per structural element.
    """
    def __init__(self, structure=None, generator=None, splitting=None, children=()):
        self.structure = structure
        self.generator = generator
        self.splitting = splitting
        self.children = tuple(children)

    @property
    def is_leaf(self):
        """bool: whether the tree is an identity leaf."""
        return self.generator is None

    def evaluate(self):
        """Returns the Structure obtained by composing the tree bottom-up."""
        if self.is_leaf:
            return self.structure

        return core.compose_all(
            self.generator.structure, [child.evaluate() for child in self.children]
        )

    def render(self):
        """Returns the tree as text, e.g. ``loop(cross(id1,id1))``."""
        if self.is_leaf:
            return 'id0' if self.structure == core.ID0 else 'id1'

        return '{}({})'.format(
            self.generator.name, ','.join(child.render() for child in self.children)
        )

    def __repr__(self):
        return 'DecompositionTree({})'.format(self.render())


ID0_LEAF = DecompositionTree(core.ID0)
ID1_LEAF = DecompositionTree(core.ID1)


class DecompositionParser():
    """Memoized parse of a structure over interval and interval-pair regions.

        Parameters:
            structure (obj): the Structure to parse.
            generators (obj): the GeneratorSet.
    """
    def __init__(self, structure, generators):
        self.structure = structure
        self.generators = generators
        self.memo = {}

    def parse(self, region=None):
        """Returns a DecompositionTree for the region, None if there is none."""
        if region is None:
            region = self.structure.legs()

        live = region_live(self.structure, region)
        region = trim_region(live)

        if region not in self.memo:
            self.memo[region] = self._parse(region, live)

        return self.memo[region]

    def _identity(self, live):
        if len(live) == 1:
            positions = live[0]
            return ID0_LEAF if len(positions) == 1 and self.structure.partner(positions[0]) is None else None

        left, right = live
        if len(left) == 1 and len(right) == 1 and self.structure.partner(left[0]) == right[0]:
            return ID1_LEAF

        return None

    def _parse(self, region, live):
        sizes = tuple(len(positions) for positions in live)
        measure = (sum(sizes), region_rank(sizes))

        if measure[0] == 0:
            return None

        leaf = self._identity(live)
        if leaf is not None:
            return leaf

        for generator in self.generators.of_kind(len(region) - 1):
            for groups, splitting in split_region(generator, self.structure, live):
                tree = self._try(generator, groups, splitting, measure)
                if tree is not None:
                    return tree

        return None

    def _try(self, generator, groups, splitting, measure):
        index = {position: number for number, group in enumerate(groups) for position in group}

        for number, group in enumerate(groups):
            for position in group:
                other = index[self.structure.partner(position)] if self.structure.partner(position) else number
                if other != number and (min(number, other), max(number, other)) not in generator.paired:
                    return None

        children = []

        for child in generator.children:
            sizes = tuple(len(groups[number]) for number in child)

            if sum(sizes) == 0 or (sum(sizes), region_rank(sizes)) >= measure:
                return None

            subtree = self.parse(tuple(splitting.intervals[number] for number in child))
            if subtree is None:
                return None
            children.append(subtree)

        return DecompositionTree(generator=generator, splitting=splitting, children=children)


def is_decomposable(structure, generators=None):
    """Decides decomposability and returns a witness.

        Parameters:
            structure (obj): the Structure.
            generators (obj): the GeneratorSet, built-in by default.

        Returns:
            tuple: (bool, DecompositionTree or None).
    """
    generators = builtin_generator_set() if generators is None else generators
    tree = DecompositionParser(structure, generators).parse()

    return tree is not None, tree


def is_semi_decomposable(alignment, generators=None):
    """Decides whether an alignment is semi-decomposable.

        Tries every set of pairings that are blank on one side, smallest
        sets first. Meant for small alignments.
    """
    structure = alignment.structure
    blank = alignment.blank
    carrier = core.FoldedSequence(structure, alignment.top)
    candidates = [
        pairing for pairing in structure.sorted_pairings()
        if any(word[pairing[0] - 1] == blank for word in (alignment.top, alignment.bottom))
    ]

    for count in range(len(candidates) + 1):
        for removed in combinations(candidates, count):
            reduced = core.remove_pairings(carrier, removed).structure
            if is_decomposable(reduced, generators)[0]:
                return True

    return False


def random_decomposition(rng, n, generators=None):
    """Samples a composition tree evaluating to a 0-structure with n bases.

        Starts from id0 and repeatedly replaces an identity leaf by a
        generator over identities, never shrinking the structure.

        Parameters:
            rng (obj): a ``random.Random`` instance.
            n (int): the number of bases, at least 1.
            generators (obj): the GeneratorSet, built-in by default.

        Returns:
            obj: the DecompositionTree.
    """
    if n < 1:
        raise exceptions.StructureError('A decomposable structure has at least one base.')

    generators = builtin_generator_set() if generators is None else generators
    root = DecompositionTree(core.ID0)
    leaves = [root]
    size = 1
    idle_steps = 0

    while size < n:
        options = []

        for leaf in leaves:
            for generator in generators.of_kind(leaf.structure.kind):
                growth = generator.structure.n - leaf.structure.n
                floor = 1 if idle_steps >= n else 0
                if floor <= growth <= n - size:
                    options.append((leaf, generator, growth))

        if not options:
            raise exceptions.StructureError(
                'No generator of {!r} grows a structure to {} bases.'.format(generators, n)
            )

        leaf, generator, growth = rng.choice(options)
        identities = [
            core.ID0 if isinstance(element, core.UnpairedBase) else core.ID1
            for element in generator.elements
        ]
        children = [DecompositionTree(identity) for identity in identities]

        leaf.structure = None
        leaf.generator = generator
        leaf.children = tuple(children)
        leaves.remove(leaf)
        leaves.extend(children)
        size += growth
        idle_steps += growth == 0

    return root
