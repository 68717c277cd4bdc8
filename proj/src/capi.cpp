// placeholder; the C API lands with the CLI
