"""Exact computation with finite permutation groups and finite lattices.

The interesting entry points live in the submodules:

    perms      -- Perm, cycle notation parsing
    groups     -- PermGroup, stabilizer chains, cores, derived series
    lattice    -- FiniteLattice, partition lattices, parachutes, isomorphism
    actions    -- congruence lattices of actions, interval_lattice(G, H)
    subgroups  -- subgroup enumeration, SubgroupCatalog, verification suites
    wreath     -- the index-raising wreath construction
    props      -- group property tables and gated conclusions
    search     -- catalog search for interval representations, Witness
    formats    -- text/JSON serialization, canonical_json
    cli        -- the ``permlat`` command
"""

__version__ = "0.1.0"
