import contextvars
import uuid

run_id_var = contextvars.ContextVar("run_id", default="LOCAL_RUN")


def new_run_id() -> str:
    run_id = uuid.uuid4().hex[:12]
    run_id_var.set(run_id)
    return run_id
