import os
import re
from fastapi import UploadFile, HTTPException, status
from app.core.config import settings

# Definition names as the grammar reads them
DEFINITION_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


def validate_source_extension(filename: str) -> str:
    """
    Only .ctt sources are accepted.

    The extension is taken from the basename, so a path in the upload name
    cannot smuggle in another suffix.
    """
    filename = os.path.basename(filename)
    ext = filename.rsplit('.', 1)[-1].lower() if '.' in filename else ''
    if not ext:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail="Source file must have an extension"
        )
    if ext not in settings.ALLOWED_EXTENSIONS:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"File type '.{ext}' is not allowed. Allowed types: {', '.join(sorted(settings.ALLOWED_EXTENSIONS))}"
        )
    return ext


def validate_source_size(file: UploadFile) -> int:
    """Reject uploads above MAX_SOURCE_SIZE without reading them into memory."""
    file.file.seek(0, 2)
    size = file.file.tell()
    file.file.seek(0)
    if size > settings.MAX_SOURCE_SIZE:
        raise HTTPException(
            status_code=status.HTTP_413_REQUEST_ENTITY_TOO_LARGE,
            detail=f"Source size ({size} bytes) exceeds maximum allowed size ({settings.MAX_SOURCE_SIZE} bytes)"
        )
    return size


def decode_source(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail="Source must be UTF-8 text"
        )


def validate_definition_name(name: str) -> str:
    if not DEFINITION_NAME.match(name):
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"'{name}' is not a definition name"
        )
    return name


def read_upload(file: UploadFile) -> str:
    """Validate an uploaded .ctt source and return its text."""
    if not file.filename:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail="Uploaded source has no filename"
        )
    validate_source_extension(file.filename)
    validate_source_size(file)
    return decode_source(file.file.read())
