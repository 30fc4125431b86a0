import logging
import time

from fastapi import Request, HTTPException
from fastapi.responses import JSONResponse
from fastapi.exceptions import RequestValidationError
from starlette.middleware.base import BaseHTTPMiddleware

from errors import RealizerError
from utils.logger import setup_logging


setup_logging()
logger = logging.getLogger("realizer.api")


async def http_exception_handler(request: Request, exc: HTTPException):
    """
    Обработчик http-ошибок
    """
    logger.warning(
        f"HTTP Exception {exc.status_code}: {exc.detail} | "
        f"Path: {request.url.path}"
    )
    return JSONResponse(
        status_code=exc.status_code,
        content={"detail": exc.detail},
    )


async def validation_exception_handler(
        request: Request,
        exc: RequestValidationError,
):
    """
    Ошибки валидации тела запроса. Ответ 400 со списком ошибок pydantic.
    """
    logger.warning(
        f"Validation Error: {len(exc.errors())} error(s) | "
        f"Path: {request.url.path}"
    )
    return JSONResponse(
        status_code=400,
        content={
            "detail": "Validation error",
            "errors": [
                {"loc": list(err["loc"]), "msg": err["msg"]}
                for err in exc.errors()
            ],
        },
    )


async def realizer_exception_handler(request: Request, exc: RealizerError):
    """
    Доменные ошибки, не перехваченные в роутерах.
    """
    logger.error(
        f"{type(exc).__name__}: {exc} | Path: {request.url.path}"
    )
    return JSONResponse(
        status_code=422,
        content={"detail": str(exc), "error": type(exc).__name__},
    )


async def global_exception_handler(request: Request, exc: Exception):
    """
    Обработчик ошибок сервера и глобальных ошибок
    """
    logger.critical(
        f"Unhandled Exception: {str(exc)} | "
        f"Path: {request.url.path}", exc_info=True
    )
    return JSONResponse(
        status_code=500,
        content={"detail": "Internal Server Error"},
    )


class LogRequestsMiddleware(BaseHTTPMiddleware):
    """
    Middleware для логирования запросов и времени их обработки
    """
    async def dispatch(self, request: Request, call_next):
        logger.info(f"{request.method} Path: {request.url.path}")
        started = time.perf_counter()
        response = await call_next(request)
        elapsed = (time.perf_counter() - started) * 1000
        if response.status_code < 400:
            logger.info(
                f"Response Status: {response.status_code} | "
                f"Path: {request.url.path} | {elapsed:.1f} ms"
            )
        return response
