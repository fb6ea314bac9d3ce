import { ApiClient, ApiError } from "../api.js";
import { language, placeholderKey, t, translated } from "../i18n.js";
import { captureSpeech, speechAvailable } from "../speech.js";
import { UsageRecorder } from "../usage.js";

// Embedded assistant widget: typed input always, speech capture when the
// browser offers it. Corpus-verbatim replies render exactly the returned
// bytes (textContent, never markup).

export class ChatWidget {
  readonly root: HTMLElement;
  private transcript: HTMLElement;
  private input: HTMLTextAreaElement;
  private sendButton: HTMLButtonElement;
  private sessionId: string | null = null;
  private inFlight = false;

  constructor(private api: ApiClient, private usage: UsageRecorder) {
    this.root = document.createElement("section");
    this.root.className = "chat-widget";
    this.root.append(translated("h2", "chat.title"));

    this.transcript = document.createElement("div");
    this.transcript.className = "chat-transcript";
    this.root.append(this.transcript);

    const controls = document.createElement("div");
    controls.className = "chat-controls";
    this.input = document.createElement("textarea");
    placeholderKey(this.input, "chat.placeholder");
    this.sendButton = translated("button", "chat.send");
    this.sendButton.dataset.testid = "chat-send";
    this.sendButton.addEventListener("click", () => void this.send());
    controls.append(this.input, this.sendButton);

    if (speechAvailable()) {
      const speakButton = translated("button", "chat.speak");
      speakButton.addEventListener("click", () => {
        speakButton.dataset.i18n = "chat.listening";
        speakButton.textContent = t("chat.listening");
        captureSpeech(language(), (text) => {
          this.input.value = text;
        }, () => {
          speakButton.dataset.i18n = "chat.speak";
          speakButton.textContent = t("chat.speak");
        });
      });
      controls.append(speakButton);
    }
    this.root.append(controls);
  }

  private bubble(kind: string, text: string): HTMLElement {
    const node = document.createElement("div");
    node.className = `chat-bubble ${kind}`;
    node.textContent = text;
    this.transcript.append(node);
    return node;
  }

  async send(): Promise<void> {
    const text = this.input.value.trim();
    if (!text || this.inFlight) {
      return;
    }
    this.inFlight = true;
    this.sendButton.disabled = true;  // one in-flight chat request per session
    this.bubble("from-user", text);
    this.input.value = "";
    this.usage.emitQuestion(text);
    try {
      if (this.sessionId === null) {
        this.sessionId = (await this.api.createChatSession(language())).session_id;
      }
      const reply = await this.api.sendChatMessage(this.sessionId, text);
      const node = this.bubble("from-assistant", reply.text);
      node.dataset.source = reply.source;
      if (reply.source === "corpus-verbatim") {
        const badge = translated("span", "chat.verified");
        badge.className = "chat-badge";
        node.before(badge);
      }
    } catch (error) {
      const note = this.bubble("from-assistant error",
        error instanceof ApiError && error.message ? error.message : t("error.offline"));
      note.dataset.source = "error";
    } finally {
      this.inFlight = false;
      this.sendButton.disabled = false;
    }
  }
}
