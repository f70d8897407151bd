import { spawnSync } from "node:child_process";

import { NativeError } from "./errors.js";

/**
 * The native pipeline is reached through its command-line interface; the
 * command can be overridden with TREEWIRE_CLI (e.g. a venv interpreter).
 */
function cliCommand(): string[] {
  const raw = process.env.TREEWIRE_CLI ?? "python3 -m treewire";
  return raw.split(" ").filter((part) => part.length > 0);
}

/** Run one subcommand; returns stdout. Non-zero exit raises NativeError. */
export function runCli(args: string[]): string {
  const [command, ...prefix] = cliCommand();
  const result = spawnSync(command, [...prefix, ...args], {
    encoding: "utf8",
    maxBuffer: 1 << 28,
  });
  if (result.error) {
    throw new NativeError(-1, `failed to launch ${command}: ${result.error.message}`);
  }
  if (result.status !== 0) {
    const diagnostic = result.stderr.trim().split("\n").pop() ?? "unknown failure";
    throw new NativeError(result.status ?? -1, diagnostic);
  }
  return result.stdout;
}

let cachedVersion: string | undefined;

/** Version string of the native library backing these bindings. */
export function version(): string {
  if (cachedVersion === undefined) {
    cachedVersion = runCli(["--version"]).trim().split(" ").pop() ?? "";
  }
  return cachedVersion;
}
