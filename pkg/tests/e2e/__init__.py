"""E2E tests package."""
