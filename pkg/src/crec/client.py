"""Thin HTTP client used by the CLI.

Without a server URL the requests run against the service app in-process
(ASGI transport), so the CLI needs no running daemon; with CREC_SERVER or
--server they go over the network to a deployed instance.
"""

from __future__ import annotations

import asyncio
import os

import httpx

SERVER_ENV = "CREC_SERVER"


class ServiceClient:
    def __init__(self, base_url: str | None = None):
        self._base_url = base_url or os.environ.get(SERVER_ENV) or None
        self._transport = None
        if self._base_url is None:
            from .service import app  # deferred: importing fastapi is not free

            self._transport = httpx.ASGITransport(app=app)

    def request(self, method: str, path: str, payload: dict | None = None) -> tuple[int, object]:
        """Return (status_code, decoded JSON body)."""
        if self._transport is not None:
            return asyncio.run(self._request_inprocess(method, path, payload))
        with httpx.Client(base_url=self._base_url, timeout=600.0) as client:
            response = client.request(method, path, json=payload)
            return response.status_code, response.json()

    async def _request_inprocess(self, method: str, path: str, payload: dict | None):
        async with httpx.AsyncClient(
            transport=self._transport, base_url="http://crec.internal", timeout=600.0
        ) as client:
            response = await client.request(method, path, json=payload)
            return response.status_code, response.json()

    def get(self, path: str) -> tuple[int, object]:
        return self.request("GET", path)

    def post(self, path: str, payload: dict) -> tuple[int, object]:
        return self.request("POST", path, payload)
