/** End-to-end flow against a stubbed service: the stub replays real
 * service payloads captured in fixtures.json. */

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { mount } from "../src/main.js";
import { ApiClient, PolicyRejection } from "../src/api.js";
import type { RecommendPayload } from "../src/types.js";
import fixtures from "./fixtures.json";

const ORIGINAL = "1qaz1qaz";
const CANDIDATE = fixtures.candidate_password as string;

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

/** Mimics the service: analyze/recommend keyed on the fixture inputs. */
function stubFetch(url: string, init?: RequestInit): Promise<Response> {
  const body = init?.body ? JSON.parse(String(init.body)) : {};
  if (url.endsWith("/v1/health")) {
    return Promise.resolve(jsonResponse(fixtures.health));
  }
  if (url.endsWith("/v1/analyze")) {
    if (body.password === ORIGINAL) return Promise.resolve(jsonResponse(fixtures.analyze_weak));
    if (body.password === CANDIDATE) {
      return Promise.resolve(jsonResponse(fixtures.analyze_candidate));
    }
    return Promise.resolve(jsonResponse(fixtures.analyze_violation, 422));
  }
  if (url.endsWith("/v1/recommend")) {
    if (body.password !== ORIGINAL) {
      return Promise.resolve(jsonResponse(fixtures.analyze_violation, 422));
    }
    const variant = body.variant ?? "asterisks";
    const key = `recommend_${variant}` as keyof typeof fixtures;
    return Promise.resolve(jsonResponse(fixtures[key]));
  }
  return Promise.resolve(new Response("not found", { status: 404 }));
}

function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

let root: HTMLElement;

beforeEach(() => {
  vi.stubGlobal("fetch", vi.fn(stubFetch));
  root = document.createElement("div");
  document.body.append(root);
});

afterEach(() => {
  vi.unstubAllGlobals();
  root.remove();
});

function find<T extends HTMLElement>(testId: string): T {
  const node = root.querySelector(`[data-testid="${testId}"]`);
  if (!node) throw new Error(`missing element: ${testId}`);
  return node as T;
}

function maybeFind(testId: string): HTMLElement | null {
  return root.querySelector(`[data-testid="${testId}"]`);
}

async function submitPassword(value: string): Promise<void> {
  const input = find<HTMLInputElement>("password-input");
  input.value = value;
  input.dispatchEvent(new Event("input", { bubbles: true }));
  find<HTMLButtonElement>("submit").click();
  await flush();
}

describe("password creation flow", () => {
  it("walks entry -> feedback -> detail -> inject -> register", async () => {
    const store = mount(root, "", "?variant=asterisks");
    expect(store.getState().screen).toBe("entry");
    expect(maybeFind("feedback")).toBeNull();

    await submitPassword(ORIGINAL);
    expect(store.getState().screen).toBe("feedback");
    expect(find("category").textContent).toBe("weak");
    expect(find("category").className).toBe("cat-weak");
    expect(find("crack-time").textContent).toBe(fixtures.analyze_weak.crack_human);

    const buttons = root.querySelectorAll(".rec-button");
    expect(buttons.length).toBe(3);

    find<HTMLButtonElement>("rec-button-1").click();
    await flush();
    expect(store.getState().screen).toBe("detail");
    expect(find("detail-password").textContent).toBe(CANDIDATE);
    expect(find("detail-crack-time").textContent).toBe(
      fixtures.recommend_asterisks.buttons[0].crack_human,
    );

    find<HTMLButtonElement>("use-recommendation").click();
    await flush();
    expect(store.getState().screen).toBe("feedback");
    const field = find<HTMLInputElement>("password-input").value;
    expect(field).toBe(CANDIDATE); // byte-for-byte injection
    expect(field.length).toBe(CANDIDATE.length);
    expect([...field].every((ch, i) => ch === CANDIDATE[i])).toBe(true);

    find<HTMLButtonElement>("register").click();
    await flush();
    expect(store.getState().screen).toBe("confirmed");
    expect(find("confirmation").textContent).toContain("registered");
    expect(find("category").textContent).toBe(fixtures.analyze_candidate.category);
  });

  it("cancel closes the dialog and leaves the field unchanged", async () => {
    mount(root, "", "");
    await submitPassword(ORIGINAL);
    find<HTMLButtonElement>("rec-button-2").click();
    await flush();
    expect(maybeFind("detail")).not.toBeNull();
    find<HTMLButtonElement>("cancel-detail").click();
    await flush();
    expect(maybeFind("detail")).toBeNull();
    expect(find<HTMLInputElement>("password-input").value).toBe(ORIGINAL);
  });

  it("allows registering the original password without changes", async () => {
    const store = mount(root, "", "");
    await submitPassword(ORIGINAL);
    find<HTMLButtonElement>("register").click();
    await flush();
    expect(store.getState().screen).toBe("confirmed");
  });

  it("shows inline policy hints on violations and no buttons", async () => {
    const store = mount(root, "", "");
    await submitPassword("pass1");
    expect(store.getState().screen).toBe("entry");
    const hints = find("violations").textContent ?? "";
    expect(hints).toContain("eight characters");
    expect(root.querySelectorAll(".rec-button").length).toBe(0);
  });

  it("renders buttons in ascending edit distance exactly as received", async () => {
    mount(root, "", "?variant=asterisks");
    await submitPassword(ORIGINAL);
    const lds = [...root.querySelectorAll(".rec-button")].map((b) =>
      Number((b as HTMLElement).dataset.ld),
    );
    expect(lds).toEqual(fixtures.recommend_asterisks.buttons.map((b) => b.ld));
    expect([...lds].sort((a, z) => a - z)).toEqual(lds);
  });

  it("never computes strength locally: all numbers come from payloads", async () => {
    mount(root, "", "");
    await submitPassword(ORIGINAL);
    expect(find("crack-time").textContent).toBe(fixtures.analyze_weak.crack_human);
    const labels = [...root.querySelectorAll(".rec-button")].map((b) => b.textContent);
    expect(labels).toEqual(fixtures.recommend_asterisks.buttons.map((b) => b.label));
  });

  it("writes no password to browser storage or the URL", async () => {
    mount(root, "", "?variant=asterisks");
    await submitPassword(ORIGINAL);
    find<HTMLButtonElement>("rec-button-1").click();
    await flush();
    find<HTMLButtonElement>("use-recommendation").click();
    await flush();
    expect(window.localStorage.length).toBe(0);
    expect(window.sessionStorage.length).toBe(0);
    expect(window.location.href).not.toContain(ORIGINAL);
    expect(window.location.href).not.toContain(CANDIDATE);
  });

  it("drops stale responses when the field is edited mid-flight", async () => {
    let releaseAnalyze: (() => void) | null = null;
    const gated = (url: string, init?: RequestInit): Promise<Response> => {
      if (url.endsWith("/v1/analyze") && releaseAnalyze === null) {
        return new Promise((resolve) => {
          releaseAnalyze = () => resolve(jsonResponse(fixtures.analyze_weak));
        });
      }
      return stubFetch(url, init);
    };
    vi.stubGlobal("fetch", vi.fn(gated));
    const store = mount(root, "", "");
    const pending = store.submitPassword(ORIGINAL); // hangs on analyze
    store.editField("something-else1"); // user keeps typing: supersedes
    releaseAnalyze!();
    await pending;
    expect(store.getState().screen).toBe("entry"); // stale payload dropped
    expect(store.getState().analysis).toBeNull();
    expect(store.getState().field).toBe("something-else1");
  });

  it("uses only native focusable controls (keyboard reachable)", async () => {
    mount(root, "", "");
    await submitPassword(ORIGINAL);
    find<HTMLButtonElement>("rec-button-1").click();
    await flush();
    const interactive = root.querySelectorAll("button, input");
    expect(interactive.length).toBeGreaterThan(0);
    for (const node of interactive) {
      expect(["BUTTON", "INPUT"]).toContain(node.tagName);
      expect(node.getAttribute("tabindex")).not.toBe("-1");
    }
  });
});

describe("variant renderings", () => {
  it("asterisks labels are the masked previews", async () => {
    mount(root, "", "?variant=asterisks");
    await submitPassword(ORIGINAL);
    for (const [i, button] of fixtures.recommend_asterisks.buttons.entries()) {
      const label = root.querySelectorAll(".rec-button")[i].textContent;
      expect(label).toBe(button.mask_preview);
      expect(label).toContain("*");
    }
  });

  it("num_changes labels state the change count", async () => {
    mount(root, "", "?variant=num_changes");
    await submitPassword(ORIGINAL);
    for (const [i, button] of fixtures.recommend_num_changes.buttons.entries()) {
      const label = root.querySelectorAll(".rec-button")[i].textContent ?? "";
      expect(label).toMatch(/^\d+ changes?$/);
      expect(label).toContain(String(button.ld));
    }
  });

  it("hack_time labels are the crack-time estimates", async () => {
    mount(root, "", "?variant=hack_time");
    await submitPassword(ORIGINAL);
    for (const [i, button] of fixtures.recommend_hack_time.buttons.entries()) {
      expect(root.querySelectorAll(".rec-button")[i].textContent).toBe(button.crack_human);
    }
  });

  it("feedback_only renders the feedback line and zero buttons", async () => {
    mount(root, "", "?variant=feedback_only");
    await submitPassword(ORIGINAL);
    expect(maybeFind("feedback")).not.toBeNull();
    expect(root.querySelectorAll(".rec-button").length).toBe(0);
  });

  it("unknown variants fall back to asterisks", async () => {
    const store = mount(root, "", "?variant=bogus");
    expect(store.getState().variant).toBe("asterisks");
  });
});

describe("api client", () => {
  it("raises PolicyRejection with the violation list on 422", async () => {
    const client = new ApiClient("", stubFetch);
    await expect(client.analyze("pass1")).rejects.toBeInstanceOf(PolicyRejection);
    await expect(client.analyze("pass1")).rejects.toMatchObject({
      violations: ["min_length"],
    });
  });

  it("passes variant and seed through to the recommend body", async () => {
    const calls: Array<{ url: string; body: Record<string, unknown> }> = [];
    const recorder = (url: string, init?: RequestInit) => {
      calls.push({ url, body: JSON.parse(String(init?.body ?? "{}")) });
      return stubFetch(url, init);
    };
    const client = new ApiClient("http://svc", recorder);
    const payload: RecommendPayload = await client.recommend(ORIGINAL, "hack_time", 11);
    expect(calls[0].url).toBe("http://svc/v1/recommend");
    expect(calls[0].body).toEqual({ password: ORIGINAL, variant: "hack_time", seed: 11 });
    expect(payload.buttons.length).toBe(3);
  });

  it("reports service health", async () => {
    const client = new ApiClient("", stubFetch);
    const health = await client.health();
    expect(health.status).toBe("ok");
  });
});
