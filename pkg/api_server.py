import logging
from datetime import datetime
from typing import List, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field
import uvicorn

import config
from listhom.brute_oracle import brute_force, count_homomorphisms
from listhom.chain_ordering import START_HINTS, find_ordering, ordering_from, verify_ordering
from listhom.errors import InvalidInput, ListHomError, NotConnected, NotInClass, SizeLimitExceeded
from listhom.graph_core import connected_components, induced_subgraph
from listhom.homomorphism_solver import SolverStats, lh_solve
from listhom.instance_gen import FAMILIES, TARGET_KINDS, random_instance
from listhom.instance_io import GraphModel, InstanceDocument
from listhom.logging_setup import configure_logging

logger = logging.getLogger("listhom.api")

# Initialize FastAPI app
app = FastAPI(
    title=f"{config.APP_NAME} API",
    description="List H-colouring for graphs with multi-chain orderings",
    version=config.APP_VERSION,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# Pydantic models for request/response
class SolveRequest(BaseModel):
    instance: InstanceDocument
    start_hint: Optional[str] = Field(default=None, description="first, last or omitted")
    fallback_brute: bool = Field(default=False, description="Use the oracle when out of class")


class OracleRequest(BaseModel):
    instance: InstanceDocument
    count: bool = Field(default=False, description="Also count all homomorphisms")


class OrderingRequest(BaseModel):
    graph: GraphModel
    start: Optional[int] = Field(default=None, ge=0, description="Only try this start vertex")


class GenerateRequest(BaseModel):
    family: str = Field(default="permutation", description="permutation, interval or arbitrary_small")
    n: int = Field(default=8, ge=1)
    k: int = Field(default=3, ge=1)
    seed: int = Field(default=1)
    density: float = Field(default=1.0, gt=0, le=1)
    target: str = Field(default="complete", description="complete or random")


class APIResponse(BaseModel):
    status: str
    message: str
    data: Optional[dict] = None


def _witness(values) -> Optional[List[int]]:
    return list(values) if values is not None else None


# Routes
@app.get("/health")
async def health_check():
    """Health check endpoint."""
    return {"status": "healthy", "version": config.APP_VERSION, "timestamp": datetime.now().isoformat()}


@app.post("/solve/", response_model=APIResponse)
async def solve_endpoint(request: SolveRequest):
    """Decide an instance with the multi-chain solver."""
    if request.start_hint is not None and request.start_hint not in START_HINTS:
        raise InvalidInput(f"start_hint must be one of {START_HINTS}")
    instance = request.instance.to_instance()
    stats = SolverStats()
    solver = "multichain"
    try:
        result = lh_solve(instance.graph, instance.lists, instance.target, start_hint=request.start_hint, stats=stats)
        answer, witness = result.answer, result.witness
    except NotInClass:
        if not request.fallback_brute:
            raise
        solver = "oracle"
        witness = brute_force(instance.graph, instance.lists, instance.target)
        answer = witness is not None

    logger.info("[SOLVE] n=%d k=%d answer=%s via %s", instance.graph.n, instance.target.n, answer, solver)
    return APIResponse(
        status="success",
        message="TRUE" if answer else "FALSE",
        data={"result": answer, "witness": _witness(witness), "solver": solver, "stats": stats.as_dict()},
    )


@app.post("/check_ordering/", response_model=APIResponse)
async def check_ordering_endpoint(request: OrderingRequest):
    """Report a multi-chain ordering per connected component."""
    g = request.graph.to_graph()
    if request.start is not None and request.start >= g.n:
        raise InvalidInput(f"Start vertex {request.start} outside [0, {g.n})")

    components = []
    for component in connected_components(g):
        sub, old = induced_subgraph(g, component)
        if request.start is not None:
            if request.start not in old:
                continue
            ordering = ordering_from(sub, old.index(request.start))
        else:
            ordering = find_ordering(sub)
        entry = {"vertices": list(old), "found": ordering is not None}
        if ordering is not None:
            entry["start"] = old[ordering.start]
            entry["layers"] = [[old[x] for x in layer] for layer in ordering.order]
            entry["violations"] = verify_ordering(sub, ordering)
        components.append(entry)

    found = all(entry["found"] for entry in components)
    return APIResponse(
        status="success",
        message="ordering found" if found else "no ordering for some component",
        data={"components": components},
    )


@app.post("/oracle/", response_model=APIResponse)
async def oracle_endpoint(request: OracleRequest):
    """Exhaustive answer for small instances."""
    instance = request.instance.to_instance()
    witness = brute_force(instance.graph, instance.lists, instance.target)
    data = {"result": witness is not None, "witness": _witness(witness)}
    if request.count:
        data["count"] = count_homomorphisms(instance.graph, instance.lists, instance.target)
    return APIResponse(status="success", message="TRUE" if witness is not None else "FALSE", data=data)


@app.post("/generate/", response_model=APIResponse)
async def generate_endpoint(request: GenerateRequest):
    """Seeded random instance as an instance document."""
    if request.family not in FAMILIES:
        raise InvalidInput(f"family must be one of {FAMILIES}")
    if request.target not in TARGET_KINDS:
        raise InvalidInput(f"target must be one of {TARGET_KINDS}")
    instance = random_instance(
        request.seed, request.n, request.k, request.density, request.family, target=request.target
    )
    document = InstanceDocument.from_instance(instance)
    return APIResponse(
        status="success",
        message=f"{request.family} instance generated",
        data={"instance": document.model_dump(exclude_none=True), "start_hint": instance.start_hint},
    )


# Error handlers
def _error_body(message: str, **extra) -> dict:
    return {"status": "error", "message": message, "timestamp": datetime.now().isoformat(), **extra}


@app.exception_handler(HTTPException)
async def http_exception_handler(request, exc):
    return JSONResponse(status_code=exc.status_code, content=_error_body(exc.detail))


@app.exception_handler(NotInClass)
async def not_in_class_handler(request, exc):
    return JSONResponse(status_code=422, content=_error_body(str(exc), vertices=list(exc.vertices)))


@app.exception_handler(ListHomError)
async def listhom_error_handler(request, exc):
    status_code = 400 if isinstance(exc, (InvalidInput, NotConnected, SizeLimitExceeded)) else 500
    return JSONResponse(status_code=status_code, content=_error_body(str(exc), error=type(exc).__name__))


@app.exception_handler(Exception)
async def general_exception_handler(request, exc):
    logger.exception("Unhandled error")
    return JSONResponse(status_code=500, content=_error_body("Internal server error", detail=str(exc)))


if __name__ == "__main__":
    configure_logging()
    config.validate_settings()
    uvicorn.run("api_server:app", host=config.API_HOST, port=config.API_PORT, log_level="info")
