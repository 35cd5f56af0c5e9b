"""
Verification State Management
Defines the state structure passed between LangGraph suite nodes
"""
from typing import TypedDict, Optional, List, Dict, Any, Annotated
import operator


class SuiteResult(TypedDict):
    suite: str
    passed: bool
    checked: int
    failures: int
    checks: List[Dict[str, Any]]


class VerificationState(TypedDict):
    """
    Complete state structure for a verification run.
    This is passed through all LangGraph nodes.
    """
    # Input
    run_config: Dict[str, Any]
    suites: List[str]

    # Suite outputs
    suite_results: Annotated[List[SuiteResult], operator.add]
    oracle_selections: Annotated[Dict[str, str], operator.or_]
    audit_log: Annotated[List[Dict[str, Any]], operator.add]

    # REPORT stage outputs
    report: Optional[Dict[str, Any]]
    status: Optional[str]  # "PASSED" or "FAILED"

    # Workflow metadata
    current_stage: Optional[str]


def create_initial_state(run_config: Dict[str, Any], suites: List[str]) -> VerificationState:
    """Create initial state from a resolved run configuration"""
    return VerificationState(
        run_config=run_config,
        suites=list(suites),
        suite_results=[],
        oracle_selections={},
        audit_log=[],
        report=None,
        status=None,
        current_stage=suites[0] if suites else "REPORT",
    )
