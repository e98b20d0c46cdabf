from celery.utils.log import get_task_logger

from celery_app import celery
from graph_io import from_graph6
from theorems import evaluate

logger = get_task_logger(__name__)


@celery.task(name="tasks.evaluate_check")
def evaluate_check(check_id: str, graph6: str, budget: int | None = None) -> dict:
    """Evaluate one registered check on one graph; the harness collects these in input order."""
    outcome = evaluate(check_id, from_graph6(graph6), budget)
    if outcome.status == "fail":
        logger.warning("%s failed on %s", check_id, graph6)
    return outcome.model_dump(mode="json")
