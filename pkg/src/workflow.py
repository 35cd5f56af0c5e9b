"""
LangGraph Workflow Orchestrator
Builds and executes the verification graph: one node per suite, then REPORT
"""
from typing import Any, Dict, List, Literal, Optional
from langgraph.graph import StateGraph, END
import logging

from .config import RunConfig, load_catalogue, suite_ids
from .state import VerificationState, create_initial_state
from .agents.verify_agents import VerificationAgents
from .errors import SkewDualError
from .tools.oracles import oracles

logger = logging.getLogger(__name__)


class VerificationWorkflow:
    """
    Main LangGraph workflow for a verification run
    """

    def __init__(self, config_path: Optional[str] = None, suites: Optional[List[str]] = None):
        # Load the suite catalogue
        self.catalogue = load_catalogue(config_path)
        known = suite_ids(self.catalogue)
        self.suites = list(suites) if suites else known
        unknown = [s for s in self.suites if s not in known]
        if unknown:
            raise SkewDualError(f"unknown suite(s) {unknown}; expected one of {known}")

        self.agents = VerificationAgents(self.catalogue)

        # Build the graph
        self.graph = self._build_graph()

    def _build_graph(self) -> StateGraph:
        """
        Build the LangGraph state graph: suites in catalogue order, each able
        to short-circuit to REPORT when fail_fast is set
        """
        workflow = StateGraph(VerificationState)

        for suite in self.suites:
            workflow.add_node(suite, self.agents.node(suite))
        workflow.add_node("REPORT", self.agents.report_node)

        workflow.set_entry_point(self.suites[0] if self.suites else "REPORT")

        for current, following in zip(self.suites, self.suites[1:] + ["REPORT"]):
            if following == "REPORT":
                workflow.add_edge(current, "REPORT")
                continue
            workflow.add_conditional_edges(
                current,
                self._should_continue,
                {
                    "continue": following,
                    "report": "REPORT",
                },
            )

        workflow.add_edge("REPORT", END)
        return workflow.compile()

    def _should_continue(self, state: VerificationState) -> Literal["continue", "report"]:
        """
        Stop at the first failing suite when fail_fast is set
        """
        results = state.get("suite_results", [])
        if state["run_config"].get("fail_fast") and results and not results[-1]["passed"]:
            logger.warning(f"Suite {results[-1]['suite']} failed; skipping to REPORT")
            return "report"
        return "continue"

    async def run(self, run_config: RunConfig) -> Dict[str, Any]:
        """
        Execute the verification workflow

        Args:
            run_config: resolved seed, sample counts and fail_fast flag

        Returns:
            Final workflow state; the report sits under "report"
        """
        oracles.reset_history()
        initial_state = create_initial_state(run_config.model_dump(), self.suites)

        logger.info("=" * 60)
        logger.info("🚀 STARTING VERIFICATION WORKFLOW")
        logger.info("=" * 60)
        logger.info(f"Suites: {', '.join(self.suites)}")
        logger.info(f"Seed: {run_config.seed}")

        try:
            cumulative_state = dict(initial_state)
            async for step in self.graph.astream(initial_state, stream_mode="values"):
                cumulative_state = dict(step)
                logger.debug(f"Stage now: {cumulative_state.get('current_stage')}")

            cumulative_state["oracle_history"] = oracles.get_selection_history()
            logger.info("=" * 60)
            logger.info(f"✅ Workflow execution completed: {cumulative_state.get('status')}")
            logger.info("=" * 60)
            return cumulative_state

        except Exception as e:
            logger.error(f"❌ Workflow execution failed: {str(e)}")
            raise

    def get_graph_visualization(self) -> str:
        """
        Get a text representation of the graph structure
        """
        lines = ["Verification Workflow Graph:", "", "START", "  ↓"]
        for suite in self.suites:
            lines += [f"{suite}  ──[fail_fast & failed]──> REPORT", "  ↓"]
        lines += ["REPORT (Aggregate)", "  ↓", "END"]
        return "\n".join(lines)
