from fastapi import FastAPI
from contextlib import asynccontextmanager
import app.kernel  # noqa: F401  raises the recursion limit
from app.core.config import settings
from app.core.log import configure_logging
from app.routers import check_router, eval_router, faces_router

@asynccontextmanager
async def lifespan(app: FastAPI):
    # startup: route logs through rich
    configure_logging(settings.LOG_LEVEL)
    yield

app = FastAPI(
    title="Cubical Canonicity Kernel",
    description="Weak-head reduction, canonicity evaluation and type checking for a cubical type theory with Glue, the circle and propositional truncation.",
    version="1.0.0",
    lifespan=lifespan
)

app.include_router(eval_router.router)
app.include_router(check_router.router)
app.include_router(faces_router.router)

@app.get("/", tags=["Root"])
async def read_root():
    return {"message": "Cubical canonicity kernel: POST /eval, /eval/upload, /check, /faces"}
