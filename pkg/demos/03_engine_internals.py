"""Under the hood: the subset-sum table, zero sets, and the reductions.

The engine keeps every nonzero-balance node in a slot and stores the
balance sum of every slot subset in a dense array.  A settlement query
collects the zero-sum subsets, shrinks that list with two reductions,
and then searches for a maximum disjoint packing.
"""

from debtclear import clear_non_atomic, clear_pairs, max_partition
from debtclear.engine import SubsetSumEngine

# ten people: five owe 99, five are owed 99, plus one +5/-5 pair
balances = {i: 99 for i in range(5)}
balances.update({5 + i: -99 for i in range(5)})
balances.update({10: 5, 11: -5})

engine = SubsetSumEngine()
engine.rebuild_from_debts(balances)
print(f"tracked nodes: {engine.vstar_size}, live mask: {engine.live_mask:#014b}")

# any subset's balance sum is one array read
slot_a, slot_b = engine.slot_of(0), engine.slot_of(5)
print("sum over {0}:", engine.subset_sum(1 << slot_a))
print("sum over {0,5}:", engine.subset_sum((1 << slot_a) | (1 << slot_b)))

s0 = engine.zero_sets()
print(f"\nzero-sum subsets: {len(s0)}")

# reduction 1: commit disjoint zero-sum pairs outright
ext = clear_pairs(s0)
print(f"committed pairs: {len(ext.fixed_parts)}, list shrinks to {len(ext.reduced)}")

# reduction 2: drop sets that strictly contain another set
atoms = clear_non_atomic(ext.reduced)
print(f"after dropping non-atomic sets: {len(atoms)}")

# the dynamic program packs what remains (here: nothing left to pack)
residual = engine.live_mask & ~ext.in_pair
result = max_partition(residual, atoms, universe=ext.reduced)
parts = len(ext.fixed_parts) + result.part_count
print(f"\ntotal zero-sum groups: {parts}")
print(f"payments needed: {engine.vstar_size} - {parts} = {engine.vstar_size - parts}")
