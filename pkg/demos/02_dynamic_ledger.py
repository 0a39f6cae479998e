"""A ledger that evolves: borrowings arrive, people leave, queries anytime.

The ledger supports five operations: add a node, record a borrowing,
cancel the debt between two nodes, retire a node (its debts are settled
first, touching as few other nodes as possible), and query a minimal
settlement plan.  Queries never change the ledger.
"""

from debtclear import Ledger

ledger = Ledger()
alice, bob, carol, dave, erin = (ledger.insert_node() for _ in range(5))
names = {alice: "alice", bob: "bob", carol: "carol", dave: "dave", erin: "erin"}


def show(plan):
    for t in plan:
        print(f"  {names[t.sender]} pays {names[t.receiver]} {t.amount}")


ledger.insert_arc(alice, bob, 10)   # alice borrows 10 from bob
ledger.insert_arc(bob, carol, 5)
ledger.insert_arc(carol, alice, 5)

plan = ledger.query()
print(f"after three borrowings, {len(plan)} payment settles everything:")
show(plan)

ledger.insert_arc(alice, dave, 5)
ledger.insert_arc(dave, erin, 10)
plan = ledger.query()
print(f"\nafter five, it takes {len(plan)}:")
show(plan)

# bob and alice call it even: the outstanding amount flows back
ledger.remove_arc(alice, bob)
print("\nafter alice and bob settle up privately:", dict(
    (names[u], d) for u, d in ledger.debts.items()
))

# dave leaves the group; his debts must be cleared first, in a way that
# keeps the rest of the group's optimal plan intact
settlement = ledger.remove_node(dave)
print(f"\ndave leaves; exit settlement ({len(settlement)} payment(s)):")
show(settlement)

plan = ledger.query()
print(f"\nremaining group still settles with {len(plan)} payment(s):")
show(plan)
