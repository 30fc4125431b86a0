import uvicorn
from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError, HTTPException

from conditions.routers import router as conditions_router
from config import API_HOST, API_PORT
from constructor.routers import router as constructor_router
from eigen.routers import router as eigen_router
from errors import RealizerError
from randomgen.routers import router as random_router
from spectrum.routers import router as spectrum_router
from utils.log_middlware import (
    LogRequestsMiddleware,
    http_exception_handler,
    validation_exception_handler,
    realizer_exception_handler,
    global_exception_handler,
)


app = FastAPI(title="Doubly Stochastic Realizer")

app.add_middleware(LogRequestsMiddleware)
app.add_exception_handler(HTTPException, http_exception_handler)
app.add_exception_handler(RequestValidationError, validation_exception_handler)
app.add_exception_handler(RealizerError, realizer_exception_handler)
app.add_exception_handler(Exception, global_exception_handler)

app.include_router(spectrum_router)
app.include_router(constructor_router)
app.include_router(conditions_router)
app.include_router(eigen_router)
app.include_router(random_router)


if __name__ == "__main__":
    uvicorn.run("main:app", host=API_HOST, port=API_PORT)
