"""
Oracle Picker - Verification Oracle Selection
Selects the independent oracle a check is compared against, from a pool per
capability, based on instance size and the requested priority
"""
from typing import Any, Dict, List, Optional
from enum import Enum
import logging

from ..algebra.linalg import MAX_ENUMERATION, bounded_kernel_search, brute_force_dual, nullspace, poly_left_kernel
from ..codes.skewrs import min_distance

logger = logging.getLogger(__name__)


class OracleCapability(str, Enum):
    CODE_DUAL = "code_dual"
    MODULE_KERNEL = "module_kernel"
    MIN_DISTANCE = "min_distance"


# Largest q^n for which a dual is computed by enumerating every word
BRUTE_FORCE_LIMIT = 4096


def _brute_force_available(context: Dict[str, Any]) -> bool:
    return context.get("q", 0) ** context.get("length", 0) <= BRUTE_FORCE_LIMIT


def _bounded_search_available(context: Dict[str, Any]) -> bool:
    width = (context.get("max_degree", 3) + 1) * context.get("rows", 0)
    return context.get("q") == 2 and 2 ** width <= MAX_ENUMERATION


class OraclePicker:
    """
    Picks an oracle from the pool of a capability:
    - Availability (enumeration oracles only at desk scale)
    - Priority ("independence" prefers exhaustive oracles, "speed" prefers algebraic ones)
    """

    def __init__(self):
        self.oracle_pools: Dict[OracleCapability, List[Dict[str, Any]]] = {
            OracleCapability.CODE_DUAL: [
                {
                    "name": "brute_force",
                    "method": "enumeration",
                    "speed": "slow",
                    "available": _brute_force_available,
                    "run": lambda F, G: brute_force_dual(F, G),
                },
                {
                    "name": "nullspace",
                    "method": "row_reduction",
                    "speed": "fast",
                    "available": lambda context: True,
                    "run": lambda F, G: nullspace(G),
                },
            ],
            OracleCapability.MODULE_KERNEL: [
                {
                    "name": "bounded_search",
                    "method": "enumeration",
                    "speed": "slow",
                    "available": _bounded_search_available,
                    "run": lambda M, max_degree=3: bounded_kernel_search(M, max_degree),
                },
                {
                    "name": "hnf_kernel",
                    "method": "hermite_form",
                    "speed": "fast",
                    "available": lambda context: True,
                    "run": lambda M, max_degree=3: poly_left_kernel(M),
                },
            ],
            OracleCapability.MIN_DISTANCE: [
                {
                    "name": "exhaustive",
                    "method": "enumeration",
                    "speed": "slow",
                    "available": lambda context: True,
                    "run": min_distance,
                },
            ],
        }

        # Oracle selection history for the run report
        self.selection_history: List[Dict[str, Any]] = []

    def select(
        self,
        capability: str,
        context: Optional[Dict[str, Any]] = None,
        pool_hint: Optional[List[str]] = None,
    ) -> Dict[str, Any]:
        """
        Select the oracle for the given capability and instance

        Args:
            capability: the oracle capability needed (e.g. "code_dual")
            context: instance size and priority (e.g. {"q": 4, "length": 3, "priority": "independence"})
            pool_hint: optional list of preferred oracles

        Returns:
            Selected oracle: name, capability, metadata and the callable under "run"
        """
        cap_enum = OracleCapability(capability)
        context = context or {}

        available = [oracle for oracle in self.oracle_pools[cap_enum] if oracle["available"](context)]

        if pool_hint:
            preferred = [oracle for oracle in available if oracle["name"] in pool_hint]
            if preferred:
                available = preferred

        priority = context.get("priority", "independence")
        if priority == "speed":
            available.sort(key=lambda o: {"fast": 0, "slow": 1}.get(o["speed"], 2))
        else:
            available.sort(key=lambda o: {"enumeration": 0}.get(o["method"], 1))

        selected = available[0]
        self.selection_history.append({
            "capability": capability,
            "selected": selected["name"],
            "context": {k: v for k, v in context.items() if k != "priority"},
            "pool_size": len(available),
        })
        logger.debug(f"Oracle '{selected['name']}' selected for '{capability}' (context: {context})")

        return {
            "name": selected["name"],
            "capability": capability,
            "metadata": {"method": selected["method"], "speed": selected["speed"]},
            "run": selected["run"],
        }

    def get_selection_history(self) -> List[Dict[str, Any]]:
        """Get the history of oracle selections"""
        return self.selection_history.copy()

    def reset_history(self):
        """Clear selection history"""
        self.selection_history = []


# Global instance
oracles = OraclePicker()
