import { ApiClient, PolicyRejection } from "./api.js";
import type { AnalyzePayload, RecommendButton, RecommendPayload, Variant } from "./types.js";

/**
 * Screens of the password-creation flow. "detail" is the recommendation
 * dialog layered over the feedback screen and is reachable only with a
 * selected button.
 */
export type Screen = "entry" | "feedback" | "detail" | "confirmed";

export interface UiState {
  screen: Screen;
  /** Current value of the password field. Lives in memory only. */
  field: string;
  variant: Variant;
  analysis: AnalyzePayload | null;
  /** Last /v1/recommend payload, buttons in service order. */
  recommendation: RecommendPayload | null;
  selectedButton: number | null;
  violations: string[];
  busy: boolean;
  error: string | null;
}

type Listener = (state: UiState) => void;

/**
 * All strength numbers, labels and masks come from the service; the
 * store never computes any of them locally.
 */
export class AppStore {
  private state: UiState;
  private listeners: Listener[] = [];
  private requestToken = 0;

  constructor(private client: ApiClient, variant: Variant = "asterisks") {
    this.state = {
      screen: "entry",
      field: "",
      variant,
      analysis: null,
      recommendation: null,
      selectedButton: null,
      violations: [],
      busy: false,
      error: null,
    };
  }

  getState(): UiState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private setState(patch: Partial<UiState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  /** Typing in the field; stale responses for older values are dropped. */
  editField(value: string): void {
    this.requestToken += 1;
    this.setState({ field: value, violations: [], error: null });
  }

  selectedRecommendation(): RecommendButton | null {
    const { recommendation, selectedButton } = this.state;
    if (recommendation === null || selectedButton === null) return null;
    return recommendation.buttons.find((b) => b.id === selectedButton) ?? null;
  }

  async submitPassword(value: string): Promise<void> {
    if (!value) return;
    const token = ++this.requestToken;
    this.setState({ field: value, busy: true, error: null, violations: [] });
    try {
      const analysis = await this.client.analyze(value);
      const recommendation = await this.client.recommend(value, this.state.variant);
      if (token !== this.requestToken) return; // superseded by a newer edit
      this.setState({
        screen: "feedback",
        analysis,
        recommendation,
        selectedButton: null,
        busy: false,
      });
    } catch (err) {
      if (token !== this.requestToken) return;
      if (err instanceof PolicyRejection) {
        this.setState({
          screen: "entry",
          analysis: null,
          recommendation: null,
          selectedButton: null,
          violations: err.violations,
          busy: false,
        });
      } else {
        this.setState({ busy: false, error: "service unavailable" });
      }
    }
  }

  openDetail(buttonId: number): void {
    const buttons = this.state.recommendation?.buttons ?? [];
    if (!buttons.some((b) => b.id === buttonId)) return;
    this.setState({ screen: "detail", selectedButton: buttonId });
  }

  /** Closes the dialog; the field is left untouched. */
  cancelDetail(): void {
    this.setState({ screen: "feedback", selectedButton: null });
  }

  /** Injects the selected candidate into the field and closes the dialog. */
  acceptRecommendation(): void {
    const chosen = this.selectedRecommendation();
    if (chosen === null) return;
    this.setState({ screen: "feedback", selectedButton: null, field: chosen.password });
  }

  /** Final confirmation; talks to /v1/analyze only. */
  async register(): Promise<void> {
    const value = this.state.field;
    if (!value) return;
    const token = ++this.requestToken;
    this.setState({ busy: true, error: null });
    try {
      const analysis = await this.client.analyze(value);
      if (token !== this.requestToken) return;
      this.setState({ screen: "confirmed", analysis, busy: false, violations: [] });
    } catch (err) {
      if (token !== this.requestToken) return;
      if (err instanceof PolicyRejection) {
        this.setState({ violations: err.violations, busy: false });
      } else {
        this.setState({ busy: false, error: "service unavailable" });
      }
    }
  }

  restart(): void {
    this.requestToken += 1;
    this.setState({
      screen: "entry",
      field: "",
      analysis: null,
      recommendation: null,
      selectedButton: null,
      violations: [],
      error: null,
      busy: false,
    });
  }
}
