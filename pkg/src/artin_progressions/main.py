import uvicorn
from fastapi import FastAPI

from artin_progressions.api.routers import router
from artin_progressions.config import Settings, setup_logging

# Set up logging at application startup
settings = Settings.get_settings()
setup_logging(settings.LOG_LEVEL)

app = FastAPI(
    title="Artin Progressions API",
    description="Exact densities of primes in arithmetic progressions with a prescribed primitive root",
)

app.include_router(router)

if __name__ == "__main__":
    uvicorn.run("artin_progressions.main:app", host=settings.API_HOST, port=settings.API_PORT)
