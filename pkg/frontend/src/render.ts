import type { AppStore, UiState } from "./state.js";
import type { AnalyzePayload } from "./types.js";

const POLICY_HINTS: Record<string, string> = {
  min_length: "use at least eight characters",
  needs_letter: "include at least one letter",
  needs_digit: "include at least one digit",
  unsupported_charset: "use only letters, digits and keyboard symbols",
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  children: (Node | string)[] = [],
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  for (const child of children) node.append(child);
  return node;
}

function feedbackLine(analysis: AnalyzePayload): HTMLElement {
  // Compose from the service's category and crack_human so the category
  // word and the time estimate can be color-coded.
  const cls = `cat-${analysis.category}`;
  return el("div", { class: "feedback", "data-testid": "feedback" }, [
    el("p", {}, [
      "Your password is ",
      el("span", { class: cls, "data-testid": "category" }, [analysis.category]),
      ".",
    ]),
    el("p", {}, [
      "Hackers may guess your password within ",
      el("span", { class: cls, "data-testid": "crack-time" }, [analysis.crack_human]),
      ".",
    ]),
  ]);
}

function passwordForm(state: UiState, store: AppStore): HTMLElement {
  const input = el("input", {
    type: "password",
    id: "password-input",
    "data-testid": "password-input",
    autocomplete: "new-password",
    value: state.field,
  });
  input.value = state.field;
  input.addEventListener("input", () => store.editField(input.value));
  const form = el("form", { "data-testid": "password-form" }, [
    el("label", { for: "password-input" }, [
      "Choose a password (at least eight characters, one letter, and one digit)",
    ]),
    input,
    el("button", { type: "submit", "data-testid": "submit" }, ["Check password"]),
  ]);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void store.submitPassword(input.value);
  });
  return form;
}

function violationList(violations: string[]): HTMLElement {
  return el(
    "ul",
    { class: "violations", "data-testid": "violations" },
    violations.map((code) => el("li", {}, [POLICY_HINTS[code] ?? code])),
  );
}

function recommendationButtons(state: UiState, store: AppStore): HTMLElement {
  const buttons = state.recommendation?.buttons ?? [];
  return el(
    "div",
    { class: "recommendations", "data-testid": "recommendations" },
    buttons.map((button) => {
      const node = el(
        "button",
        {
          type: "button",
          class: "rec-button",
          "data-testid": `rec-button-${button.id}`,
          "data-ld": String(button.ld),
        },
        [button.label],
      );
      node.addEventListener("click", () => store.openDetail(button.id));
      return node;
    }),
  );
}

function detailDialog(state: UiState, store: AppStore): HTMLElement {
  const chosen = store.selectedRecommendation();
  if (chosen === null) return el("div");
  const use = el("button", { type: "button", "data-testid": "use-recommendation" }, [
    "Use our recommendation",
  ]);
  use.addEventListener("click", () => store.acceptRecommendation());
  const cancel = el("button", { type: "button", "data-testid": "cancel-detail" }, ["Cancel"]);
  cancel.addEventListener("click", () => store.cancelDetail());
  return el("div", { class: "detail-overlay" }, [
    el("div", { class: "detail", role: "dialog", "aria-modal": "true", "data-testid": "detail" }, [
      el("p", {}, ["We recommend: ", el("code", { "data-testid": "detail-password" }, [chosen.password])]),
      el("p", {}, [
        "Hackers may guess this password within ",
        el("span", { "data-testid": "detail-crack-time" }, [chosen.crack_human]),
        ".",
      ]),
      use,
      cancel,
    ]),
  ]);
}

export function render(root: HTMLElement, state: UiState, store: AppStore): void {
  root.replaceChildren();
  const page = el("main", { class: `screen-${state.screen}` });

  if (state.screen === "confirmed" && state.analysis !== null) {
    const restart = el("button", { type: "button", "data-testid": "restart" }, ["Start over"]);
    restart.addEventListener("click", () => store.restart());
    page.append(
      el("h1", {}, ["Registration complete"]),
      el("p", { "data-testid": "confirmation" }, ["Your password was registered."]),
      feedbackLine(state.analysis),
      restart,
    );
    root.append(page);
    return;
  }

  page.append(el("h1", {}, ["Create your password"]), passwordForm(state, store));
  if (state.violations.length > 0) page.append(violationList(state.violations));
  if (state.error !== null) {
    page.append(el("p", { class: "error", "data-testid": "error" }, [state.error]));
  }

  if ((state.screen === "feedback" || state.screen === "detail") && state.analysis !== null) {
    page.append(feedbackLine(state.analysis));
    page.append(recommendationButtons(state, store));
    const register = el("button", { type: "button", "data-testid": "register" }, ["Register"]);
    register.addEventListener("click", () => void store.register());
    page.append(register);
  }

  if (state.screen === "detail") page.append(detailDialog(state, store));
  root.append(page);
}
