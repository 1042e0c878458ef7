"""
Driving a session over the control socket
=========================================

The renderer can host a live WebSocket endpoint while it runs. An
instructor console connects, receives a hello with the session layout,
then streams state snapshots and the cue log, and may inject commands
at any point. Here both ends live in one process: we start a short
street session, request a check-in, then trigger the learner's opt-out
path at a chosen time and watch the safety machine wind down.
"""

import threading

from sonotrain.control import ControlClient, ControlServer
from sonotrain.scenarios import DifficultyParams, generate
from sonotrain.session import SessionConfig

script = generate("street", DifficultyParams(), seed=5, duration_s=45.0)
config = SessionConfig(script=script, seed=12)

server = ControlServer(config, accept_timeout=10.0)
box = {}
worker = threading.Thread(
    target=lambda: box.update(result=server.serve_one()))
worker.start()

client = ControlClient(*server.endpoint)
layout = client.hello["payload"]
print(f"connected: template={layout['template']} "
      f"duration={layout['duration_s']} s, "
      f"snapshots at {layout['snapshot_hz']} Hz")
print(f"commands offered: {', '.join(layout['commands'])}")
print(f"script {layout['script_hash'][:12]}, "
      f"lexicon {layout['lexicon_hash'][:12]}")

# deferred commands: the server holds each until the session clock
# reaches at_s, applies it on that tick, and acks with the time used
pending = {client.command("request_check_in", at_s=8.0): "check_in",
           client.command("opt_out", at_s=20.0): "opt_out"}
seen = set()
for message in client.messages():
    if message["type"] == "ack" and message.get("id") in pending:
        name = pending.pop(message["id"])
        print(f"{name} applied at t={message['payload']['time_s']:.2f} s")
    elif message["type"] == "state_snapshot":
        state = message["payload"]["state"]
        if state not in seen:
            seen.add(state)
            print(f"  t={message['payload']['time_s']:6.2f}  {state}")
        if state == "Ended":
            break
client.close()

worker.join()
report = box["result"].report
print(f"server-side report: opt_outs={report.opt_outs}, "
      f"de_escalated={report.de_escalated}")
