import { ApiClient } from "./api.js";
import { render } from "./render.js";
import { AppStore } from "./state.js";
import { VARIANTS, type Variant } from "./types.js";

/** Query parameters configure the study condition and the service URL;
 * passwords never appear in the URL or in browser storage. */
function variantFromQuery(search: string): Variant {
  const value = new URLSearchParams(search).get("variant");
  return (VARIANTS as string[]).includes(value ?? "") ? (value as Variant) : "asterisks";
}

export function mount(root: HTMLElement, baseUrl = "", search = ""): AppStore {
  const client = new ApiClient(baseUrl);
  const store = new AppStore(client, variantFromQuery(search));
  store.subscribe((state) => render(root, state, store));
  render(root, store.getState(), store);
  return store;
}

if (typeof document !== "undefined" && document.getElementById("app") !== null) {
  const apiBase = new URLSearchParams(window.location.search).get("api") ?? "";
  mount(document.getElementById("app") as HTMLElement, apiBase, window.location.search);
}
