"""debtclear: settle group debts with a minimal number of payments.

The package maintains a borrowing graph under node and arc updates and
answers settlement queries by partitioning the nonzero-balance nodes
into as many disjoint zero-sum groups as possible.
"""

from .bench import (
    CASE_TABLE,
    BenchReport,
    BenchRow,
    CaseSpec,
    SplitMix64,
    case_spec,
    format_plan,
    format_static,
    generate_case,
    parse_static,
    run_benchmark,
    run_script,
)
from .engine import DEFAULT_CAPACITY, SubsetSumEngine
from .errors import (
    AmountError,
    BenchError,
    CapacityError,
    ContractError,
    DebtClearError,
    LoopError,
    MoneyOverflowError,
    OracleLimitError,
    ParseError,
    ScriptError,
    StaleMaskError,
    UnknownNodeError,
)
from .heuristics import PairExtraction, ZeroSetList, clear_non_atomic, clear_pairs
from .ledger import Ledger, QueryStats, solve_static, solve_static_with_stats
from .model import (
    Borrowing,
    Money,
    NodeId,
    Transaction,
    TransactionPlan,
    absolute_debt,
    balances_of,
    is_equivalent,
    plan_settles,
)
from .oracle import ORACLE_LIMIT, OracleResult, oracle_max_zero_partition
from .partition import PartitionResult, max_partition, min_removal_set, settle_part

__version__ = "0.1.0"

__all__ = [
    "AmountError",
    "BenchError",
    "BenchReport",
    "BenchRow",
    "Borrowing",
    "CASE_TABLE",
    "CapacityError",
    "CaseSpec",
    "ContractError",
    "DEFAULT_CAPACITY",
    "DebtClearError",
    "Ledger",
    "LoopError",
    "Money",
    "MoneyOverflowError",
    "NodeId",
    "ORACLE_LIMIT",
    "OracleLimitError",
    "OracleResult",
    "PairExtraction",
    "ParseError",
    "PartitionResult",
    "QueryStats",
    "ScriptError",
    "SplitMix64",
    "StaleMaskError",
    "SubsetSumEngine",
    "Transaction",
    "TransactionPlan",
    "UnknownNodeError",
    "ZeroSetList",
    "absolute_debt",
    "balances_of",
    "case_spec",
    "clear_non_atomic",
    "clear_pairs",
    "format_plan",
    "format_static",
    "generate_case",
    "is_equivalent",
    "max_partition",
    "min_removal_set",
    "oracle_max_zero_partition",
    "parse_static",
    "plan_settles",
    "run_benchmark",
    "run_script",
    "settle_part",
    "solve_static",
    "solve_static_with_stats",
]
