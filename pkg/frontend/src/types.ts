/** Payload shapes of the dpar HTTP service (single source of truth). */

export type Variant = "asterisks" | "num_changes" | "hack_time" | "feedback_only";

export const VARIANTS: Variant[] = ["asterisks", "num_changes", "hack_time", "feedback_only"];

export type Category = "weak" | "fair" | "strong";

export interface AnalyzePayload {
  valid: boolean;
  violations: string[];
  PS: number;
  category: Category;
  crack_seconds: number;
  crack_human: string;
  feedback_text: string;
}

export interface RecommendButton {
  id: number;
  label: string;
  password: string;
  PS: number;
  crack_human: string;
  ld: number;
  mask_preview: string;
}

export interface RecommendPayload extends AnalyzePayload {
  buttons: RecommendButton[];
  seed: number;
  rng: string;
}

export interface HealthPayload {
  status: string;
  model_meta?: { corpus_lines: number; l33t_hash: string };
}
