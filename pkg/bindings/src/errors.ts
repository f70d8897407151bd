/** Invalid array shapes or contents, caught before the native call. */
export class ConversionError extends Error {
  /** Name of the offending argument ("positions", "edge_index", ...). */
  readonly field: string;

  constructor(field: string, detail: string) {
    super(`${field}: ${detail}`);
    this.name = "ConversionError";
    this.field = field;
  }
}

/** A failure reported by the native pipeline, diagnostic kept verbatim. */
export class NativeError extends Error {
  readonly exitCode: number;

  constructor(exitCode: number, diagnostic: string) {
    super(diagnostic);
    this.name = "NativeError";
    this.exitCode = exitCode;
  }
}
